#include "qcs/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

std::string_view to_string(ResonatorVariant variant) {
  switch (variant) {
    case ResonatorVariant::Short:
      return "short";
    case ResonatorVariant::Medium:
      return "medium";
    case ResonatorVariant::Long:
      return "long";
  }
  return "unknown";
}

ResonatorVariant parse_variant(std::string_view name) {
  if (name == "short") return ResonatorVariant::Short;
  if (name == "medium") return ResonatorVariant::Medium;
  if (name == "long") return ResonatorVariant::Long;
  throw PreconditionError("unknown resonator variant '" + std::string(name) + "'");
}

PrimeWindow prime_window(double y, WindowLower lower) {
  const double lambda = std::sqrt(iterated_log(y, 1) * iterated_log(y, 2));
  if (!(lambda > 0.0)) {
    return {std::numeric_limits<double>::quiet_NaN(), 1.0, 0.0};
  }
  const double lo = lower == WindowLower::Lambda ? lambda : lambda * lambda;
  const double hi = std::exp(std::pow(std::log(lambda), 2));
  return {lambda, lo, hi};
}

std::vector<SupportTerm> squarefree_support(std::span<const std::int64_t> primes,
                                            std::span<const double> weights,
                                            double bound) {
  require(primes.size() == weights.size(), "squarefree_support: size mismatch");
  const auto limit = floor_to_count(bound);
  std::vector<SupportTerm> out;
  if (limit < 1) return out;
  out.push_back({1, 1.0});
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto p = primes[i];
    const auto existing = out.size();
    for (std::size_t j = 0; j < existing; ++j) {
      if (out[j].n <= limit / p) out.push_back({out[j].n * p, out[j].weight * weights[i]});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SupportTerm& a, const SupportTerm& b) { return a.n < b.n; });
  return out;
}

namespace {

void check_common(double X, double x, double delta) {
  require(X >= 16.0, "resonator: X must be at least 16");
  require(x >= 2.0, "resonator: x must be at least 2");
  require(delta > 0.0 && delta < 0.25, "resonator: delta must lie in (0, 1/4)");
}

std::vector<std::int64_t> window_primes(const PrimeWindow& window, double cap) {
  std::vector<std::int64_t> out;
  const double top = std::min(window.hi, cap);
  if (!(top >= 2.0) || window.lo > top) return out;
  for (auto p : primes_up_to(static_cast<std::int64_t>(std::floor(top)))) {
    if (static_cast<double>(p) >= window.lo) out.push_back(p);
  }
  return out;
}

std::vector<double> dd_weights(std::span<const std::int64_t> primes, double lambda) {
  std::vector<double> w;
  w.reserve(primes.size());
  for (auto p : primes) {
    const auto pd = static_cast<double>(p);
    w.push_back(lambda / (std::sqrt(pd) * std::log(pd)));
  }
  return w;
}

}  // namespace

ResonatorSpec make_medium_resonator(double X, double x, double y, WindowLower lower,
                                    double delta) {
  check_common(X, x, delta);
  require(y > 0.0, "medium resonator: y must be positive");
  const auto window = prime_window(y, lower);
  MediumResonator medium{y, window.lambda, lower, window_primes(window, y), {}};
  if (medium.primes.empty()) {
    medium.support = {{1, 1.0}};
  } else {
    const auto w = dd_weights(medium.primes, window.lambda);
    medium.support = squarefree_support(medium.primes, w, std::max(y, 1.0));
  }
  return {ResonatorVariant::Medium, X, x, 0.0, delta, std::move(medium)};
}

ResonatorSpec make_short_resonator(double X, double x, std::vector<std::int64_t> primes,
                                   std::vector<double> coefficients, double y) {
  require(X >= 1.0 && x >= 1.0, "short resonator: need X >= 1 and x >= 1");
  require(primes.size() == coefficients.size(),
          "short resonator: one coefficient per prime");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require(is_prime(primes[i]), "short resonator: " + std::to_string(primes[i]) +
                                     " is not prime");
    require(std::abs(coefficients[i]) < 1.0,
            "short resonator: coefficients need |a_p| < 1");
    if (i > 0) require(primes[i - 1] < primes[i], "short resonator: primes must ascend");
  }
  if (y <= 0.0) y = primes.empty() ? 1.0 : static_cast<double>(primes.back());
  return {ResonatorVariant::Short, X, x, 0.0, 0.0,
          ShortResonator{y, std::move(primes), std::move(coefficients)}};
}

ResonatorSpec make_long_resonator(double X, double x, GcdSet set, double delta) {
  check_common(X, x, delta);
  const auto N = static_cast<std::int64_t>(set.size());
  return {ResonatorVariant::Long, X, x, 0.0, delta, LongResonator{N, std::move(set)}};
}

ResonatorSpec build_resonator(ResonatorVariant variant, double X, double x, double alpha,
                              double delta) {
  check_common(X, x, delta);
  switch (variant) {
    case ResonatorVariant::Short: {
      require(alpha > 0.0 && alpha < 0.25, "short resonator: alpha must lie in (0, 1/4)");
      require(delta < alpha, "short resonator: delta must be smaller than alpha");
      const double logX = iterated_log(X, 1);
      const double log2X = iterated_log(X, 2);
      const double log3X = iterated_log(X, 3);
      const double log2x = iterated_log(x, 2);
      const double y =
          (0.25 - alpha) * logX * log2X / std::max(log2x - log3X, log3X);
      ShortResonator data{y, {}, {}};
      if (y >= 2.0) {
        data.primes = primes_up_to(static_cast<std::int64_t>(std::floor(y)));
        const double a = 1.0 - std::log(y) / (std::log(x) * std::pow(log2X, 1.0 + delta));
        require(a > 0.0 && a < 1.0,
                "short resonator: coefficient a_p = " + std::to_string(a) +
                    " falls outside (0, 1)");
        data.coefficients.assign(data.primes.size(), a);
      }
      return {variant, X, x, alpha, delta, std::move(data)};
    }
    case ResonatorVariant::Medium: {
      const double y = std::pow(X, 0.5 - delta) / (x * x);
      auto spec = make_medium_resonator(X, x, y, WindowLower::LambdaSquared, delta);
      spec.alpha = alpha;
      return spec;
    }
    case ResonatorVariant::Long: {
      const double N = std::floor(std::pow(X, 0.5 - delta) / x);
      require(N >= 1.0, "long resonator: floor(X^(1/2 - delta)/x) must be at least 1");
      auto spec = make_long_resonator(X, x, construct_extremal_set(static_cast<std::size_t>(N)),
                                      delta);
      spec.alpha = alpha;
      return spec;
    }
  }
  throw PreconditionError("unknown resonator variant");
}

double resonator_value(const ResonatorSpec& spec, const Discriminant& d) {
  if (const auto* s = std::get_if<ShortResonator>(&spec.data)) {
    double value = 1.0;
    for (std::size_t i = 0; i < s->primes.size(); ++i) {
      const double a = s->coefficients[i];
      if (!(std::abs(a) < 1.0)) throw PreconditionError("short resonator: |a_p| >= 1");
      value /= 1.0 - a * d.chi(s->primes[i]);
    }
    return value;
  }
  if (const auto* m = std::get_if<MediumResonator>(&spec.data)) {
    CompensatedSum sum;
    for (const auto& term : m->support) sum.add(term.weight * d.chi(term.n));
    return sum.value();
  }
  const auto& l = std::get<LongResonator>(spec.data);
  std::int64_t sum = 0;
  for (auto m : l.set.members()) sum += d.chi(m);
  return static_cast<double>(sum);
}

namespace {

struct MomentPartial {
  CompensatedSum m1;
  CompensatedSum m2;
  double best = -std::numeric_limits<double>::infinity();

  void merge(const MomentPartial& other) {
    m1.merge(other.m1);
    m2.merge(other.m2);
    best = std::max(best, other.best);
  }
};

MomentPartial accumulate(const ResonatorSpec& spec, bool squared,
                         std::span<const Discriminant> ds) {
  MomentPartial part;
  for (const auto& d : ds) {
    const auto s = static_cast<double>(char_sum(d, spec.x));
    const double r = resonator_value(spec, d);
    const double weight = r * r;
    const double value = squared ? s * s : s;
    part.m1.add(weight);
    part.m2.add(value * weight);
    part.best = std::max(part.best, value);
  }
  return part;
}

RatioReport finish(const ResonatorSpec& spec, bool squared, Window window,
                   const MomentPartial& total, std::size_t scanned) {
  const double m1 = total.m1.value();
  if (!(m1 > 0.0)) {
    throw PreconditionError("moment_ratio: the resonator vanishes on the whole window");
  }
  const double m2 = total.m2.value();
  const double ratio = m2 / m1;
  return {spec,
          window,
          floor_to_count(spec.x),
          m1,
          m2,
          ratio,
          total.best,
          squared,
          total.best >= ratio - kRatioTolerance * std::abs(ratio),
          static_cast<std::int64_t>(scanned)};
}

std::vector<Discriminant> window_discriminants(const ResonatorSpec& spec, Window window) {
  auto ds = window.lo < window.hi ? enumerate_fundamental(window.lo, window.hi, false)
                                  : std::vector<Discriminant>{};
  if (ds.empty()) {
    throw EmptyWindowError("no fundamental discriminant in (X, 2X] for X = " +
                           std::to_string(spec.X));
  }
  return ds;
}

}  // namespace

RatioReport moment_ratio(const ResonatorSpec& spec, bool squared, const Executor& executor) {
  const auto window = Window::doubling(spec.X);
  const auto ds = window_discriminants(spec, window);
  const auto partials = executor.map(chunk_count(ds.size()), [&](std::size_t c) {
    const auto begin = c * kScanChunk;
    const auto end = std::min(ds.size(), begin + kScanChunk);
    return accumulate(spec, squared, std::span(ds).subspan(begin, end - begin));
  });
  MomentPartial total;
  for (const auto& part : partials) total.merge(part);
  return finish(spec, squared, window, total, ds.size());
}

RatioReport moment_ratio_over(const ResonatorSpec& spec, bool squared,
                              std::span<const Discriminant> discriminants) {
  if (discriminants.empty()) throw EmptyWindowError("no discriminants to scan");
  return finish(spec, squared, Window::doubling(spec.X),
                accumulate(spec, squared, discriminants), discriminants.size());
}

ShortChainReport short_chain_bound(const ResonatorSpec& spec, double x) {
  const auto* s = std::get_if<ShortResonator>(&spec.data);
  require(s != nullptr, "short_chain_bound: needs a short resonator");
  require(x >= 1.0, "short_chain_bound: x must be at least 1");
  const double y = std::max(s->y, 1.0);

  auto coefficient = [&](std::int64_t p) {
    const auto it = std::lower_bound(s->primes.begin(), s->primes.end(), p);
    if (it == s->primes.end() || *it != p) return 0.0;
    return s->coefficients[static_cast<std::size_t>(it - s->primes.begin())];
  };

  CompensatedSum bound;
  CompensatedSum plain;
  const auto ks = enumerate_smooth(x, y);
  for (auto k : ks) {
    double a_k = 1.0;
    double euler = 1.0;
    for (const auto& [p, e] : factorize(k)) {
      a_k *= std::pow(coefficient(p), e);
      const auto pd = static_cast<double>(p);
      euler *= pd / (pd + 1.0);
    }
    plain.add(a_k);
    bound.add(a_k * euler);
  }
  return {bound.value(), plain.value(), psi_count(x, y), static_cast<std::int64_t>(ks.size())};
}

double lemma_dd_ratio(double Y, double N, WindowLower lower) {
  require(Y >= 1.0 && N >= 1.0, "lemma_dd_ratio: need Y >= 1 and N >= 1");
  const auto window = prime_window(Y, lower);
  const auto primes = window_primes(window, Y);
  if (primes.empty()) return N;

  const auto w = dd_weights(primes, window.lambda);
  const auto support = squarefree_support(primes, w, Y);
  CompensatedSum numerator;
  CompensatedSum denominator;
  for (const auto& a : support) {
    denominator.add(a.weight * a.weight);
    for (const auto& b : support) {
      const auto g = std::gcd(a.n, b.n);
      const auto longer = std::max(a.n / g, b.n / g);
      const double count = std::floor(N / static_cast<double>(longer));
      numerator.add(a.weight * b.weight * count);
    }
  }
  return numerator.value() / denominator.value();
}

}  // namespace qcs
