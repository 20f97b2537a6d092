// Acceptance runner: one PASS/FAIL line per criterion, each checked against
// its result and its wall-clock limit. Exit status is nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcs/arith.hpp"
#include "qcs/charsums.hpp"
#include "qcs/gcdsum.hpp"
#include "qcs/meanvalues.hpp"
#include "qcs/oracles.hpp"
#include "qcs/resonance.hpp"
#include "qcs/verify.hpp"

using namespace qcs;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

Outcome kronecker_oracle() {
  std::int64_t compared = 0;
  std::int64_t mismatches = 0;
  const auto primes = primes_up_to(499);
  for (std::int64_t d = -500; d <= 500; ++d) {
    if (d == 0 || !is_fundamental(d)) continue;
    for (auto p : primes) {
      if (p == 2 || d % p == 0) continue;
      ++compared;
      if (kronecker(d, p) != oracle::euler_criterion(d, p)) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%lld pairs, %lld mismatches", (long long)compared,
                               (long long)mismatches)};
}

Outcome full_period() {
  std::int64_t tested = 0;
  std::int64_t bad = 0;
  for (const auto& d : enumerate_fundamental(-2001, 2000, false)) {
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= d.modulus(); ++n) sum += kronecker(d.value(), n);
    ++tested;
    if (sum != 0) ++bad;
  }
  return {bad == 0, fmt("%lld discriminants, %lld nonzero", (long long)tested, (long long)bad)};
}

Outcome main_term(std::int64_t n, double target, double tolerance) {
  const auto sum = mean_value_sum(n, 1e6);
  const double rel = std::abs(static_cast<double>(sum) - target) / target;
  return {rel <= tolerance,
          fmt("sum %lld vs %.1f, relative gap %.4f%%", (long long)sum, target, 100 * rel)};
}

Outcome nonsquare() {
  const double cap = std::pow(10.0, 3.6);
  bool ok = true;
  std::string detail;
  for (std::int64_t n : {2, 3, 5, 6}) {
    const auto sum = mean_value_sum(n, 1e6);
    ok = ok && std::abs(static_cast<double>(sum)) <= cap;
    detail += fmt("n=%lld: %lld ", (long long)n, (long long)sum);
  }
  return {ok, detail + fmt("(cap %.0f)", cap)};
}

Outcome fundamental_inequality() {
  const auto& configs = pinned_resonance_configs();
  int held = 0;
  bool variants[3] = {false, false, false};
  bool modes[2] = {false, false};
  for (const auto& pinned : configs) {
    const auto spec = pinned.build();
    const auto report = moment_ratio(spec, pinned.squared);
    const bool holds = report.observed_max >= report.ratio - kRatioTolerance * std::abs(report.ratio);
    if (holds && report.inequality_holds) ++held;
    variants[static_cast<int>(spec.variant)] = true;
    modes[pinned.squared ? 1 : 0] = true;
    if (!(spec.X <= 1e4 && spec.x <= 100)) return {false, pinned.label + " out of range"};
  }
  const bool coverage = variants[0] && variants[1] && variants[2] && modes[0] && modes[1];
  return {configs.size() == 20 && held == 20 && coverage,
          fmt("%d/%zu configurations hold, coverage %s", held, configs.size(),
              coverage ? "complete" : "incomplete")};
}

Outcome diagonal_bound() {
  bool ok = true;
  std::string detail;
  for (auto [Y, N] : std::vector<std::pair<double, double>>{{1e2, 1e2}, {1e3, 1e2}, {1e4, 1e3}}) {
    const double v = lemma_dd_ratio(Y, N);
    ok = ok && v >= std::floor(N);
    detail += fmt("(%g,%g)->%.6g ", Y, N, v);
  }
  const double ours = lemma_dd_ratio(100, 50);
  const double ref = oracle::dd_ratio(100, 50, WindowLower::Lambda);
  const double rel = std::abs(ours - ref) / std::abs(ref);
  ok = ok && rel <= 1e-8;
  return {ok, detail + fmt("oracle gap %.2e", rel)};
}

Outcome gcd_oracle() {
  std::mt19937_64 rng(12345);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto members = oracle::random_squarefree(rng, 20, 1'000'000);
    const double ours = gcd_sum(GcdSet(members));
    const double ref = oracle::gcd_sum(members);
    worst = std::max(worst, std::abs(ours - ref) / ref);
  }
  const double extremal = gcd_sum(construct_extremal_set(1000));
  double best_random = 0.0;
  bool beats = true;
  for (int trial = 0; trial < 20; ++trial) {
    const double r = gcd_sum(GcdSet(oracle::random_squarefree(rng, 1000, 1'000'000)));
    best_random = std::max(best_random, r);
    beats = beats && extremal > r;
  }
  return {worst <= 1e-10 && beats,
          fmt("worst relative gap %.2e; extremal %.2f vs best random %.2f", worst, extremal,
              best_random)};
}

Outcome psi_oracle() {
  std::int64_t mismatches = 0;
  for (double y : {2.0, 3.0, 5.0, 10.0, 100.0}) {
    std::int64_t direct = 0;
    for (std::int64_t x = 1; x <= 10000; ++x) {
      if (static_cast<double>(largest_prime_factor(x)) <= y) ++direct;
      if (psi_count(static_cast<double>(x), y) != direct) ++mismatches;
    }
  }
  const auto at = psi_count(100, 5);
  return {mismatches == 0 && at == 34,
          fmt("%lld mismatches, psi(100, 5) = %lld", (long long)mismatches, (long long)at)};
}

Outcome chain_consistency() {
  const auto spec = make_short_resonator(1e3, 6, {2, 3}, {0.5, 0.5});
  // k = 1, 2, 3, 4, 6
  const double hand = 1.0 + 0.5 * (2.0 / 3) + 0.5 * (3.0 / 4) + 0.25 * (2.0 / 3) +
                      0.25 * (2.0 / 3) * (3.0 / 4);
  const double bound = short_chain_bound(spec, 6).bound;
  const double rel = std::abs(bound - hand) / hand;
  bool ordered = true;
  int shorts = 0;
  for (const auto& pinned : pinned_resonance_configs()) {
    const auto s = pinned.build();
    if (s.variant != ResonatorVariant::Short) continue;
    ++shorts;
    const auto chain = short_chain_bound(s, s.x);
    ordered = ordered && chain.plain_sum >= chain.bound;
  }
  return {rel <= 1e-12 && ordered && shorts > 0,
          fmt("hand %.15g vs %.15g; ordering holds on %d short specs: %s", hand, bound, shorts,
              ordered ? "yes" : "no")};
}

Outcome determinism() {
  bool ok = true;
  const Executor one(1);
  const auto base = delta_max(Window::doubling(1e5), 100, {false, true}, one);
  std::vector<RatioReport> base_ratios;
  const auto& configs = pinned_resonance_configs();
  for (const auto& p : configs) base_ratios.push_back(moment_ratio(p.build(), p.squared, one));
  auto close = [](double a, double b) {
    return a == b || std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
  };
  for (unsigned threads : {4u, 8u}) {
    const Executor exec(threads);
    const auto r = delta_max(Window::doubling(1e5), 100, {false, true}, exec);
    ok = ok && r.argmax_d == base.argmax_d && r.max_value == base.max_value &&
         r.count_scanned == base.count_scanned && r.argmax_abs_d == base.argmax_abs_d &&
         r.max_abs_value == base.max_abs_value;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const auto m = moment_ratio(configs[i].build(), configs[i].squared, exec);
      const auto& b = base_ratios[i];
      ok = ok && close(m.M1, b.M1) && close(m.M2, b.M2) && close(m.ratio, b.ratio) &&
           m.observed_max == b.observed_max && m.discriminants_scanned == b.discriminants_scanned;
    }
  }
  return {ok, fmt("delta_max on (1e5, 2e5] and %zu resonator configs at 1, 4, 8 workers",
                  configs.size())};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "kronecker matches Euler's criterion", 5, kronecker_oracle},
      {2, "full-period cancellation", 10, full_period},
      {3, "mean value main term, n = 1", 60, [] { return main_term(1, 1e6 * kInverseZeta2, 0.01); }},
      {4, "mean value main term, n = 4", 60,
       [] { return main_term(4, 4e6 / (M_PI * M_PI), 0.02); }},
      {5, "nonsquare cancellation", 120, nonsquare},
      {6, "fundamental inequality on 20 configurations", 120, fundamental_inequality},
      {7, "diagonal-sum bound and oracle", 60, diagonal_bound},
      {8, "gcd sum oracle and extremal set", 60, gcd_oracle},
      {9, "smooth-number count oracle", 10, psi_oracle},
      {10, "short chain consistency", 60, chain_consistency},
      {11, "determinism across worker counts", 600, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s [%2d] %s: %s; %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), seconds, c.limit_seconds,
                in_time ? "" : " TIME LIMIT EXCEEDED");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
