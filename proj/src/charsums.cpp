#include "qcs/charsums.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

std::int64_t char_sum(const Discriminant& d, double x) {
  auto limit = floor_to_count(x);
  if (limit == 0) return 0;
  if (d.is_unit()) return limit;
  // a nonprincipal character sums to zero over each full period
  limit %= d.modulus();
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= limit; ++n) sum += d.chi(n);
  return sum;
}

std::int64_t char_sum(std::int64_t d, double x) { return char_sum(Discriminant(d), x); }

CharSumProfile char_sum_prefix(const Discriminant& d, std::int64_t x_max) {
  require(x_max >= 1, "char_sum_prefix: x_max must be positive");
  CharSumProfile out{d, {}, {}};
  out.cutoffs.reserve(static_cast<std::size_t>(x_max));
  out.values.reserve(static_cast<std::size_t>(x_max));
  std::int64_t running = 0;
  for (std::int64_t n = 1; n <= x_max; ++n) {
    running += d.chi(n);
    out.cutoffs.push_back(n);
    out.values.push_back(running);
  }
  return out;
}

Window Window::doubling(double X) {
  require(X >= 0.0, "doubling window needs X >= 0");
  return {static_cast<std::int64_t>(std::floor(X)),
          static_cast<std::int64_t>(std::floor(2.0 * X))};
}

namespace {

struct PartialMax {
  std::optional<Discriminant> best;
  std::int64_t best_value = 0;
  std::optional<Discriminant> best_abs;
  std::int64_t best_abs_value = 0;

  // Candidates arrive in ascending d, so strict comparison keeps the smallest
  // maximizer.
  void offer(const Discriminant& d, std::int64_t value) {
    if (!best || value > best_value) {
      best = d;
      best_value = value;
    }
    const auto magnitude = value < 0 ? -value : value;
    if (!best_abs || magnitude > best_abs_value) {
      best_abs = d;
      best_abs_value = magnitude;
    }
  }

  void merge(const PartialMax& other) {
    if (other.best && (!best || other.best_value > best_value ||
                       (other.best_value == best_value && *other.best < *best))) {
      best = other.best;
      best_value = other.best_value;
    }
    if (other.best_abs && (!best_abs || other.best_abs_value > best_abs_value ||
                           (other.best_abs_value == best_abs_value &&
                            *other.best_abs < *best_abs))) {
      best_abs = other.best_abs;
      best_abs_value = other.best_abs_value;
    }
  }
};

}  // namespace

MaxSearchResult delta_max(Window window, double x, const DeltaMaxOptions& options,
                          const Executor& executor) {
  require(x >= 1.0, "delta_max: x must be at least 1");
  if (window.lo >= window.hi) {
    throw EmptyWindowError("window (" + std::to_string(window.lo) + ", " +
                           std::to_string(window.hi) + "] is empty");
  }
  const auto ds = enumerate_fundamental(window.lo, window.hi, options.include_unit);
  if (ds.empty()) {
    throw EmptyWindowError("no fundamental discriminant in (" +
                           std::to_string(window.lo) + ", " +
                           std::to_string(window.hi) + "]");
  }

  const auto partials = executor.map(chunk_count(ds.size()), [&](std::size_t c) {
    PartialMax part;
    const auto end = std::min(ds.size(), (c + 1) * kScanChunk);
    for (auto i = c * kScanChunk; i < end; ++i) part.offer(ds[i], char_sum(ds[i], x));
    return part;
  });
  PartialMax total;
  for (const auto& part : partials) total.merge(part);

  MaxSearchResult out{window, floor_to_count(x), *total.best, total.best_value,
                      static_cast<std::int64_t>(ds.size()), std::nullopt, std::nullopt};
  if (options.report_abs) {
    out.argmax_abs_d = total.best_abs;
    out.max_abs_value = total.best_abs_value;
  }
  return out;
}

double pv_baseline(const Discriminant& d) {
  require(d.modulus() >= 2, "pv_baseline: need |d| >= 2");
  const auto q = static_cast<double>(d.modulus());
  return std::sqrt(q) * std::log(q);
}

double pv_baseline(std::int64_t d) {
  require(std::llabs(d) >= 2, "pv_baseline: need |d| >= 2");
  const auto q = static_cast<double>(std::llabs(d));
  return std::sqrt(q) * std::log(q);
}

}  // namespace qcs
