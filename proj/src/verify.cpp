#include "qcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "qcs/arith.hpp"
#include "qcs/charsums.hpp"
#include "qcs/errors.hpp"
#include "qcs/gcdsum.hpp"
#include "qcs/meanvalues.hpp"
#include "qcs/numeric.hpp"
#include "qcs/oracles.hpp"

namespace qcs {

Suite parse_suite(std::string_view name) {
  if (name == "arith") return Suite::Arith;
  if (name == "charsum") return Suite::Charsum;
  if (name == "meanvalue") return Suite::MeanValue;
  if (name == "resonance") return Suite::Resonance;
  if (name == "gcd") return Suite::Gcd;
  throw PreconditionError("unknown verify suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Arith:
      return "arith";
    case Suite::Charsum:
      return "charsum";
    case Suite::MeanValue:
      return "meanvalue";
    case Suite::Resonance:
      return "resonance";
    case Suite::Gcd:
      return "gcd";
  }
  return "unknown";
}

const std::vector<PinnedResonance>& pinned_resonance_configs() {
  using V = ResonatorVariant;
  using L = WindowLower;
  static const std::vector<PinnedResonance> configs = {
      {"short X=1e4 x=50", [] { return build_resonator(V::Short, 1e4, 50, 0.01, 0.005); }, false},
      {"short X=1e4 x=50 sq", [] { return build_resonator(V::Short, 1e4, 50, 0.01, 0.005); }, true},
      {"short X=1e4 x=10", [] { return build_resonator(V::Short, 1e4, 10, 0.01, 0.005); }, false},
      {"short X=5e3 x=20 sq", [] { return build_resonator(V::Short, 5e3, 20, 0.02, 0.01); }, true},
      {"short X=2e3 x=100", [] { return build_resonator(V::Short, 2e3, 100, 0.01, 0.005); }, false},
      {"short X=1e3 x=30", [] { return build_resonator(V::Short, 1e3, 30, 0.05, 0.01); }, false},
      {"short X=1e4 x=100 sq", [] { return build_resonator(V::Short, 1e4, 100, 0.1, 0.05); }, true},
      {"short {2,3} a=1/2 X=1e3 x=6",
       [] { return make_short_resonator(1e3, 6, {2, 3}, {0.5, 0.5}); }, false},
      {"medium X=1e4 x=10", [] { return build_resonator(V::Medium, 1e4, 10, 0.01, 0.01); }, false},
      {"medium X=1e4 x=10 sq", [] { return build_resonator(V::Medium, 1e4, 10, 0.01, 0.01); }, true},
      {"medium y=1e3 X=1e4 x=20",
       [] { return make_medium_resonator(1e4, 20, 1e3, L::Lambda); }, false},
      {"medium y=1e4 X=5e3 x=50 sq",
       [] { return make_medium_resonator(5e3, 50, 1e4, L::Lambda); }, true},
      {"medium y=1e6 X=1e4 x=100",
       [] { return make_medium_resonator(1e4, 100, 1e6, L::Lambda); }, false},
      {"medium y=1e6 X=2e3 x=7 sq",
       [] { return make_medium_resonator(2e3, 7, 1e6, L::Lambda); }, true},
      {"long X=1e4 x=2", [] { return build_resonator(V::Long, 1e4, 2, 0.01, 0.01); }, false},
      {"long X=1e4 x=2 sq", [] { return build_resonator(V::Long, 1e4, 2, 0.01, 0.01); }, true},
      {"long X=1e4 x=5", [] { return build_resonator(V::Long, 1e4, 5, 0.01, 0.01); }, false},
      {"long X=1e4 x=10 sq", [] { return build_resonator(V::Long, 1e4, 10, 0.01, 0.01); }, true},
      {"long X=5e3 x=3", [] { return build_resonator(V::Long, 5e3, 3, 0.01, 0.01); }, false},
      {"long X=1e3 x=2 sq", [] { return build_resonator(V::Long, 1e3, 2, 0.01, 0.01); }, true},
  };
  return configs;
}

namespace {

class Checks {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

template <class T>
std::string describe(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::vector<std::int64_t> fundamental_values(std::int64_t lo, std::int64_t hi, bool unit) {
  std::vector<std::int64_t> out;
  for (const auto& d : enumerate_fundamental(lo, hi, unit)) out.push_back(d.value());
  return out;
}

// ---------------------------------------------------------------------------
// arith
// ---------------------------------------------------------------------------

void arith_suite(Checks& checks) {
  const auto small = fundamental_values(-501, 500, false);
  const auto odd_primes = [] {
    auto p = primes_up_to(499);
    p.erase(p.begin());
    return p;
  }();

  std::int64_t mismatches = 0;
  std::int64_t compared = 0;
  for (auto d : small) {
    for (auto p : odd_primes) {
      if (d % p == 0) continue;
      ++compared;
      if (kronecker(d, p) != oracle::euler_criterion(d, p)) ++mismatches;
    }
  }
  checks.add("kronecker matches Euler's criterion", mismatches == 0,
             describe(compared) + " pairs, " + describe(mismatches) + " mismatches");

  std::int64_t failures = 0;
  for (const auto& d : enumerate_fundamental(-201, 200, true)) {
    for (std::int64_t m = 1; m <= 200; ++m) {
      const int cm = d.chi(m);
      for (std::int64_t n = 1; n <= 200; ++n) {
        if (d.chi(m * n) != cm * d.chi(n)) ++failures;
      }
    }
  }
  checks.add("kronecker completely multiplicative", failures == 0,
             describe(failures) + " failures, |d| <= 200, m, n <= 200");

  failures = 0;
  for (const auto& d : enumerate_fundamental(-501, 500, true)) {
    for (std::int64_t n = 1; n <= 1000; ++n) {
      const bool zero = d.chi(n) == 0;
      if (zero != (std::gcd(d.value(), n) > 1)) ++failures;
      if (d.chi(n) != d.chi(n + d.modulus())) ++failures;
    }
  }
  checks.add("zero iff gcd > 1, period |d|", failures == 0, describe(failures) + " failures");

  failures = 0;
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const auto [n0, n1] = squarefree_decompose(n);
    if (n0 * n1 * n1 != n || !oracle::is_squarefree(n0)) ++failures;
  }
  checks.add("squarefree decomposition round trip", failures == 0, "n <= 10^6");

  const auto enumerated = fundamental_values(-5001, 5000, true);
  checks.add("enumeration matches the fundamental predicate",
             enumerated == oracle::fundamental_in(-5001, 5000, true), "-5000 <= d <= 5000");

  failures = 0;
  const std::vector<double> ys = {1, 2, 3, 5, 10, 100};
  for (std::size_t yi = 0; yi < ys.size(); ++yi) {
    std::int64_t previous = 0;
    for (std::int64_t x = 1; x <= 2000; ++x) {
      const auto count = psi_count(static_cast<double>(x), ys[yi]);
      if (count != static_cast<std::int64_t>(enumerate_smooth(static_cast<double>(x), ys[yi]).size()))
        ++failures;
      if (count < previous) ++failures;
      if (yi > 0 && count < psi_count(static_cast<double>(x), ys[yi - 1])) ++failures;
      previous = count;
    }
  }
  checks.add("psi agrees with enumeration and is monotone", failures == 0,
             "x <= 2000, y in {1,2,3,5,10,100}");

  const double X = 1e6;
  const auto count = enumerate_fundamental(-1'000'001, 1'000'000, true).size();
  const double density = static_cast<double>(count) / X;
  checks.add("density of fundamental discriminants ~ 6/pi^2",
             std::abs(density / kInverseZeta2 - 1.0) <= 0.01,
             "density " + describe(density) + " vs " + describe(kInverseZeta2));
}

// ---------------------------------------------------------------------------
// charsum
// ---------------------------------------------------------------------------

void charsum_suite(Checks& checks, const Executor& executor) {
  std::int64_t failures = 0;
  std::int64_t tested = 0;
  for (const auto& d : enumerate_fundamental(-2001, 2000, false)) {
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= d.modulus(); ++n) sum += d.chi(n);
    ++tested;
    if (sum != 0) ++failures;
  }
  checks.add("full-period cancellation", failures == 0,
             describe(tested) + " discriminants with 1 < |d| <= 2000");

  failures = 0;
  for (const auto& d : enumerate_fundamental(-301, 300, true)) {
    const auto profile = char_sum_prefix(d, 3 * d.modulus() + 7);
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
      const auto x = profile.cutoffs[i];
      const auto cap = d.is_unit() ? x : std::min(x, d.modulus());
      if (std::llabs(profile.values[i]) > cap) ++failures;
      if (char_sum(d, static_cast<double>(x)) != profile.values[i]) ++failures;
    }
  }
  checks.add("|S_d(x)| <= min(x, |d|), reduced sum equals prefix", failures == 0,
             "|d| <= 300");

  failures = 0;
  for (double X : {10.0, 50.0, 100.0, 500.0, 1000.0}) {
    for (double x : {5.0, 20.0, 100.0}) {
      const auto result = delta_max(Window::doubling(X), x, {}, executor);
      std::int64_t best = 0;
      std::int64_t best_d = 0;
      bool first = true;
      for (auto d : oracle::fundamental_in(result.window.lo, result.window.hi, false)) {
        const auto s = oracle::char_sum(d, static_cast<std::int64_t>(x));
        if (first || s > best) {
          best = s;
          best_d = d;
          first = false;
        }
      }
      if (result.max_value != best || result.argmax_d.value() != best_d) ++failures;
    }
  }
  checks.add("delta_max reproduced by a naive rescan", failures == 0, "X <= 10^3");
}

// ---------------------------------------------------------------------------
// meanvalue
// ---------------------------------------------------------------------------

void meanvalue_suite(Checks& checks, const Executor& executor) {
  bool same = true;
  for (double X : {10.0, 1e3, 1e6}) {
    same = same && mean_value_main_term(4, X) == mean_value_main_term(16, X) &&
           mean_value_main_term(9, X) == mean_value_main_term(81, X);
  }
  checks.add("main term depends on the radical only", same);

  const double X = 1e6;
  for (std::int64_t n : {2, 3, 5, 6}) {
    const auto s = mean_value_sum(n, X, executor);
    checks.add("nonsquare cancellation n=" + describe(n),
               static_cast<double>(std::llabs(s)) <= std::pow(X, 0.6),
               "sum " + describe(s) + ", bound " + describe(std::pow(X, 0.6)));
  }

  const auto unit = mean_value_sum(1, 2e4, executor);
  const auto oracle_count =
      static_cast<std::int64_t>(oracle::fundamental_in(-20001, 20000, true).size());
  checks.add("n = 1 sum counts discriminants", unit == oracle_count,
             describe(unit) + " vs " + describe(oracle_count));

  bool additive = true;
  for (std::int64_t n : {1, 3, 4, 12}) {
    const auto whole = mean_value_sum(n, 1e5, executor);
    const auto inner = mean_value_sum(n, 37'000, executor);
    const auto outer = mean_value_window_sum(n, {37'000, 100'000}, executor) +
                       mean_value_window_sum(n, {-100'001, -37'001}, executor);
    additive = additive && whole == inner + outer;
  }
  checks.add("additivity over windows", additive, "split at |d| = 37000");
}

// ---------------------------------------------------------------------------
// resonance
// ---------------------------------------------------------------------------

void resonance_suite(Checks& checks, const Executor& executor) {
  std::int64_t failures = 0;
  std::string worst;
  for (const auto& config : pinned_resonance_configs()) {
    const auto report = moment_ratio(config.build(), config.squared, executor);
    if (!report.inequality_holds) {
      ++failures;
      worst += (worst.empty() ? "" : "; ") + config.label;
    }
  }
  checks.add("observed max >= M2/M1 on 20 pinned configurations", failures == 0, worst);

  failures = 0;
  std::string regime;
  for (const auto& config : pinned_resonance_configs()) {
    const auto spec = config.build();
    const auto* s = std::get_if<ShortResonator>(&spec.data);
    if (s == nullptr) continue;
    double cap = 1.0;
    for (double a : s->coefficients) cap /= 1.0 - a;
    for (const auto& d : enumerate_fundamental(static_cast<std::int64_t>(spec.X),
                                               static_cast<std::int64_t>(2 * spec.X), false)) {
      if (resonator_value(spec, d) > cap * (1.0 + 1e-12)) ++failures;
    }
    regime += (regime.empty() ? "" : "; ") + config.label +
              ": prod(1-a_p)^-2 = " + describe(cap * cap) +
              " vs X^(1/2-alpha) = " + describe(std::pow(spec.X, 0.5 - spec.alpha));
  }
  checks.add("short resonator bounded by prod (1 - a_p)^-1", failures == 0, regime);

  failures = 0;
  for (double y : {30.0, 200.0, 1e3, 1e4}) {
    const auto spec = make_medium_resonator(1e3, 10, y, WindowLower::Lambda);
    const auto& m = std::get<MediumResonator>(spec.data);
    if (m.primes.size() > 3) continue;
    for (const auto& d : enumerate_fundamental(1000, 1100, false)) {
      // expand prod (1 + r(p) chi_d(p)) over subsets, keeping products <= y
      double expanded = 0.0;
      const auto k = m.primes.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::int64_t n = 1;
        double term = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
          if (!(mask & (std::size_t{1} << i))) continue;
          const auto p = static_cast<double>(m.primes[i]);
          n *= m.primes[i];
          term *= m.lambda / (std::sqrt(p) * std::log(p)) * d.chi(m.primes[i]);
        }
        if (static_cast<double>(n) <= y) expanded += term;
      }
      if (!relative_close(expanded, resonator_value(spec, d), 1e-12) &&
          std::abs(expanded - resonator_value(spec, d)) > 1e-12)
        ++failures;
    }
  }
  checks.add("medium resonator equals its truncated Euler expansion", failures == 0);

  {
    const auto spec = build_resonator(ResonatorVariant::Medium, 1e4, 10, 0.01, 0.01);
    const auto report = moment_ratio(spec, false, executor);
    std::int64_t total = 0;
    const auto ds = enumerate_fundamental(10'000, 20'000, false);
    for (const auto& d : ds) total += char_sum(d, 10);
    const double mean = static_cast<double>(total) / static_cast<double>(ds.size());
    checks.add("unit resonator ratio equals the window mean of S_d(x)",
               relative_close(report.ratio, mean, 1e-9) || std::abs(report.ratio - mean) < 1e-12,
               describe(report.ratio) + " vs " + describe(mean));
  }

  failures = 0;
  for (auto [Y, N] : std::vector<std::pair<double, double>>{
           {1e2, 1e2}, {1e3, 1e2}, {1e4, 1e3}, {1e5, 37.5}, {1e6, 1e4}}) {
    if (lemma_dd_ratio(Y, N) < std::floor(N)) ++failures;
  }
  checks.add("diagonal-sum ratio >= floor(N)", failures == 0);

  failures = 0;
  std::mt19937_64 rng(20240611);
  for (const auto& config : pinned_resonance_configs()) {
    const auto spec = config.build();
    auto ds = enumerate_fundamental(static_cast<std::int64_t>(spec.X),
                                    static_cast<std::int64_t>(2 * spec.X), false);
    const auto forward = moment_ratio_over(spec, config.squared, ds);
    std::shuffle(ds.begin(), ds.end(), rng);
    const auto shuffled = moment_ratio_over(spec, config.squared, ds);
    // |M2| <= M1 x^2 bounds the scale of M2 even when it nearly cancels
    const double m2_scale = forward.M1 * std::max(1.0, spec.x * spec.x);
    if (!relative_close(forward.M1, shuffled.M1, 1e-9) ||
        std::abs(forward.M2 - shuffled.M2) > 1e-9 * m2_scale ||
        forward.observed_max != shuffled.observed_max)
      ++failures;
  }
  checks.add("reports invariant under scan order", failures == 0);
}

// ---------------------------------------------------------------------------
// gcd
// ---------------------------------------------------------------------------

void gcd_suite(Checks& checks, const Executor& executor) {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto members = oracle::random_squarefree(rng, 20, 1'000'000);
    const double fast = gcd_sum(GcdSet(members), executor);
    const double slow = oracle::gcd_sum(members);
    worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
  }
  checks.add("pair formula matches the double loop", worst <= 1e-10,
             "worst relative error " + describe(worst));

  bool ok = true;
  for (std::size_t N : {1u, 3u, 10u, 100u, 1000u}) {
    const auto a = construct_extremal_set(N);
    const auto b = construct_extremal_set(N);
    ok = ok && a == b && a.size() == N;
    for (auto m : a.members()) ok = ok && squarefree_decompose(m).n1 == 1;
    ok = ok && gcd_sum(a, Executor{1}) == gcd_sum(a, Executor{4});
  }
  checks.add("extremal sets are squarefree, exact size, deterministic", ok);

  ok = true;
  for (std::size_t N : {5u, 40u, 300u}) {
    const auto set = construct_extremal_set(N);
    auto c = set.smoothness() + 1;
    while (!is_prime(c)) ++c;
    std::vector<std::int64_t> scaled;
    for (auto m : set.members()) scaled.push_back(c * m);
    ok = ok && relative_close(gcd_sum(GcdSet(scaled)), gcd_sum(set), 1e-12);
  }
  checks.add("gcd sum invariant under a coprime prime dilation", ok);

  const double extremal = gcd_sum(construct_extremal_set(1000), executor);
  double best_random = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    best_random = std::max(
        best_random, gcd_sum(GcdSet(oracle::random_squarefree(rng, 1000, 1'000'000)), executor));
  }
  checks.add("extremal set beats random squarefree sets", extremal > best_random,
             describe(extremal) + " vs best random " + describe(best_random));
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const Executor& executor) {
  Checks checks;
  switch (suite) {
    case Suite::Arith:
      arith_suite(checks);
      break;
    case Suite::Charsum:
      charsum_suite(checks, executor);
      break;
    case Suite::MeanValue:
      meanvalue_suite(checks, executor);
      break;
    case Suite::Resonance:
      resonance_suite(checks, executor);
      break;
    case Suite::Gcd:
      gcd_suite(checks, executor);
      break;
  }
  return checks.take();
}

}  // namespace qcs
