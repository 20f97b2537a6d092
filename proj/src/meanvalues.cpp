#include "qcs/meanvalues.hpp"

#include <cmath>

#include "qcs/arith.hpp"
#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

namespace {

std::int64_t sum_over(const std::vector<Discriminant>& ds, std::int64_t n,
                      const Executor& executor) {
  const auto partials = executor.map(chunk_count(ds.size()), [&](std::size_t c) {
    std::int64_t part = 0;
    const auto end = std::min(ds.size(), (c + 1) * kScanChunk);
    for (auto i = c * kScanChunk; i < end; ++i) part += ds[i].chi(n);
    return part;
  });
  std::int64_t total = 0;
  for (auto p : partials) total += p;
  return total;
}

}  // namespace

std::int64_t mean_value_sum(std::int64_t n, double X, const Executor& executor) {
  require(n >= 1, "mean_value_sum: n must be positive");
  require(X >= 1.0, "mean_value_sum: X must be at least 1");
  const auto bound = floor_to_count(X);
  return mean_value_window_sum(n, {-bound - 1, bound}, executor);
}

std::int64_t mean_value_window_sum(std::int64_t n, Window window,
                                   const Executor& executor) {
  require(n >= 1, "mean_value_window_sum: n must be positive");
  if (window.lo >= window.hi) return 0;
  return sum_over(enumerate_fundamental(window.lo, window.hi, true), n, executor);
}

double mean_value_main_term(std::int64_t n, double X) {
  require(n >= 1, "mean_value_main_term: n must be positive");
  if (!is_perfect_square(n)) return 0.0;
  double euler = 1.0;
  for (const auto& pe : factorize(n)) {
    const auto p = static_cast<double>(pe.prime);
    euler *= p / (p + 1.0);
  }
  return X * kInverseZeta2 * euler;
}

MeanValueReport mean_value_report(std::int64_t n, double X, double eps,
                                  const Executor& executor) {
  const auto exact = mean_value_sum(n, X, executor);
  const auto main = mean_value_main_term(n, X);
  const auto [f, g] = error_factors(n, eps);

  double unconditional = 0.0;
  if (is_perfect_square(n)) {
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    unconditional = std::sqrt(X) * static_cast<double>(divisor_count(root));
  } else {
    const auto nd = static_cast<double>(n);
    unconditional = std::sqrt(X) * std::pow(nd, 0.25) * std::log(nd);
  }

  return {n,
          X,
          exact,
          main,
          static_cast<double>(exact) - main,
          unconditional,
          std::pow(X, 0.5 + eps) * f * g};
}

}  // namespace qcs
