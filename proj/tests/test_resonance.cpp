#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qcs/errors.hpp"
#include "qcs/oracles.hpp"
#include "qcs/resonance.hpp"
#include "qcs/verify.hpp"

using namespace qcs;

namespace {

std::vector<Discriminant> window_of(double X) {
  const auto w = Window::doubling(X);
  return enumerate_fundamental(w.lo, w.hi, false);
}

}  // namespace

TEST_CASE("variant names") {
  CHECK(parse_variant("short") == ResonatorVariant::Short);
  CHECK(parse_variant("medium") == ResonatorVariant::Medium);
  CHECK(parse_variant("long") == ResonatorVariant::Long);
  CHECK(to_string(ResonatorVariant::Long) == "long");
  CHECK_THROWS_AS(parse_variant("huge"), PreconditionError);
}

TEST_CASE("build_resonator: short plug-in values") {
  const auto spec = build_resonator(ResonatorVariant::Short, 1e8, 100, 0.01, 0.01 / 2);
  const auto& s = std::get<ShortResonator>(spec.data);
  CHECK(s.primes == std::vector<std::int64_t>{2, 3, 5, 7, 11});
  for (double a : s.coefficients) CHECK(a == doctest::Approx(0.8155043828120803).epsilon(1e-12));
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Short, 1e8, 100, 0.01, 0.01),
                  PreconditionError);
  CHECK(s.y == doctest::Approx(12.045081426676171).epsilon(1e-12));
}

TEST_CASE("build_resonator: long and medium plug-in values") {
  const auto l = build_resonator(ResonatorVariant::Long, 1e6, 10, 0.01, 0.01);
  CHECK(std::get<LongResonator>(l.data).N == 87);
  CHECK(std::get<LongResonator>(l.data).set.size() == 87);

  const auto m = build_resonator(ResonatorVariant::Medium, 1e4, 10);
  const auto& med = std::get<MediumResonator>(m.data);
  CHECK(med.primes.empty());
  CHECK(med.support.size() == 1);
  for (const auto& d : window_of(1e4)) {
    if (d.value() > 10100) break;
    CHECK(resonator_value(m, d) == 1.0);
  }
}

TEST_CASE("build_resonator: parameter domain") {
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Long, 10, 2), PreconditionError);
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Long, 1e4, 1), PreconditionError);
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Medium, 1e4, 10, 0.01, 0.3),
                  PreconditionError);
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Short, 1e4, 10, 0.3, 0.01),
                  PreconditionError);
  CHECK_THROWS_AS(build_resonator(ResonatorVariant::Long, 1e4, 200), PreconditionError);
  CHECK_THROWS_AS(make_short_resonator(1e3, 6, {2, 3}, {0.5, 1.0}), PreconditionError);
  CHECK_THROWS_AS(make_short_resonator(1e3, 6, {2, 4}, {0.5, 0.5}), PreconditionError);
}

TEST_CASE("resonator_value: trivial and worked values") {
  const auto zero = make_short_resonator(1e3, 6, {2, 3, 5}, {0.0, 0.0, 0.0});
  const auto half = make_short_resonator(1e3, 6, {2, 3}, {0.5, 0.5});
  const auto one = make_long_resonator(1e3, 6, GcdSet({1}));
  for (auto v : {5, -4, 12, 13, -3}) {
    CHECK(resonator_value(zero, Discriminant(v)) == 1.0);
    CHECK(resonator_value(one, Discriminant(v)) == 1.0);
  }
  CHECK(resonator_value(half, Discriminant(5)) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("resonator_value matches the oracle") {
  std::vector<ResonatorSpec> specs{
      build_resonator(ResonatorVariant::Short, 1e4, 50, 0.01, 0.005),
      make_medium_resonator(1e4, 20, 1e3, WindowLower::Lambda),
      make_medium_resonator(2e3, 7, 1e5, WindowLower::Lambda),
      build_resonator(ResonatorVariant::Long, 1e4, 5),
  };
  const auto ds = window_of(1e3);
  for (const auto& spec : specs) {
    for (std::size_t i = 0; i < ds.size(); i += 7) {
      const auto& d = ds[i];
      REQUIRE(resonator_value(spec, d) ==
              doctest::Approx(oracle::resonator(spec, d.value())).epsilon(1e-12));
    }
  }
}

TEST_CASE("short resonator is bounded by the product of (1 - a_p)^-1") {
  const auto spec = build_resonator(ResonatorVariant::Short, 1e4, 100, 0.1, 0.05);
  const auto& s = std::get<ShortResonator>(spec.data);
  double cap = 1.0;
  for (double a : s.coefficients) cap /= 1.0 - a;
  for (const auto& d : window_of(1e4)) {
    const double r = resonator_value(spec, d);
    REQUIRE(r > 0.0);
    REQUIRE(r <= cap * (1 + 1e-12));
  }
}

TEST_CASE("medium support expands the prime product") {
  const auto spec = make_medium_resonator(1e4, 20, 1e3, WindowLower::Lambda);
  const auto& m = std::get<MediumResonator>(spec.data);
  REQUIRE(!m.primes.empty());
  REQUIRE(m.primes.size() <= 3);
  for (const auto& d : window_of(1e3)) {
    // expand prod (1 + r(p) chi(p)) over subsets, keep products <= y
    double expanded = 0.0;
    const auto k = m.primes.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::int64_t n = 1;
      double term = 1.0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1)) continue;
        const auto p = m.primes[i];
        n *= p;
        term *= m.lambda / (std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p))) *
                d.chi(p);
      }
      if (static_cast<double>(n) <= m.y) expanded += term;
    }
    REQUIRE(resonator_value(spec, d) == doctest::Approx(expanded).epsilon(1e-12));
  }
}

TEST_CASE("squarefree_support") {
  const std::vector<std::int64_t> primes{2, 3, 5};
  const std::vector<double> weights{0.5, 0.25, 2.0};
  const auto s = squarefree_support(primes, weights, 12);
  std::vector<std::int64_t> ns;
  for (const auto& t : s) ns.push_back(t.n);
  CHECK(ns == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10});
  CHECK(s[4].weight == 0.125);
  CHECK(s[5].weight == 1.0);
  CHECK(squarefree_support(primes, weights, 0.5).empty());
}

TEST_CASE("moment_ratio against the double-loop oracle") {
  for (const auto& pinned : pinned_resonance_configs()) {
    auto spec = pinned.build();
    spec.X = 1e3;
    const auto report = moment_ratio(spec, pinned.squared);
    const auto ref = oracle::moment_ratio(spec, pinned.squared);
    REQUIRE(report.discriminants_scanned == ref.scanned);
    REQUIRE(report.M1 == doctest::Approx(ref.M1).epsilon(1e-10));
    REQUIRE(report.M2 == doctest::Approx(ref.M2).epsilon(1e-9).scale(ref.M1));
    REQUIRE(report.observed_max == ref.max_value);
    REQUIRE(report.inequality_holds);
  }
}

TEST_CASE("unit resonator gives the plain mean") {
  const auto spec = make_long_resonator(1e3, 30, GcdSet({1}));
  const auto report = moment_ratio(spec, false);
  double total = 0.0;
  const auto ds = window_of(1e3);
  for (const auto& d : ds) total += static_cast<double>(char_sum(d, 30.0));
  CHECK(report.M1 == static_cast<double>(ds.size()));
  CHECK(report.ratio == doctest::Approx(total / static_cast<double>(ds.size())).epsilon(1e-12));
  CHECK(report.inequality_holds);
}

TEST_CASE("moment_ratio is invariant under scan order") {
  const auto spec = build_resonator(ResonatorVariant::Short, 2e3, 100, 0.01, 0.005);
  auto ds = window_of(2e3);
  const auto forward = moment_ratio_over(spec, true, ds);
  std::mt19937_64 rng(7);
  std::shuffle(ds.begin(), ds.end(), rng);
  const auto shuffled = moment_ratio_over(spec, true, ds);
  CHECK(shuffled.M1 == doctest::Approx(forward.M1).epsilon(1e-12));
  CHECK(shuffled.M2 == doctest::Approx(forward.M2).epsilon(1e-12));
  CHECK(shuffled.observed_max == forward.observed_max);
  const auto chunked = moment_ratio(spec, true, Executor(3));
  CHECK(chunked.ratio == doctest::Approx(forward.ratio).epsilon(1e-12));
}

TEST_CASE("moment_ratio errors") {
  auto spec = make_long_resonator(1e3, 30, GcdSet({1}));
  spec.X = 1.0;
  CHECK_THROWS_AS(moment_ratio(spec, false), EmptyWindowError);
  CHECK_THROWS_AS(moment_ratio_over(spec, false, {}), EmptyWindowError);
}

TEST_CASE("short_chain_bound") {
  const auto spec = make_short_resonator(1e3, 6, {2, 3}, {0.5, 0.5});
  const auto chain = short_chain_bound(spec, 6);
  CHECK(chain.bound == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(chain.bound == doctest::Approx(oracle::short_chain(std::vector<std::int64_t>{2, 3},
                                                           std::vector<double>{0.5, 0.5}, 6))
                           .epsilon(1e-12));
  CHECK(chain.plain_sum == doctest::Approx(1 + 0.5 + 0.5 + 0.25 + 0.25));
  CHECK(chain.psi == 5);
  CHECK(chain.terms == 5);

  const auto zero = make_short_resonator(1e3, 50, {2, 3, 5}, {0.0, 0.0, 0.0});
  CHECK(short_chain_bound(zero, 50).bound == 1.0);
  const auto tiny = make_short_resonator(1e3, 50, {}, {}, 1.5);
  CHECK(short_chain_bound(tiny, 50).bound == 1.0);
  CHECK(short_chain_bound(tiny, 50).psi == 1);

  const auto built = build_resonator(ResonatorVariant::Short, 1e4, 100, 0.1, 0.05);
  const auto c = short_chain_bound(built, 100);
  CHECK(c.plain_sum >= c.bound);
  const auto& s = std::get<ShortResonator>(built.data);
  CHECK(c.bound == doctest::Approx(oracle::short_chain(s.primes, s.coefficients, 100)).epsilon(1e-12));
  CHECK_THROWS_AS(short_chain_bound(build_resonator(ResonatorVariant::Long, 1e4, 5), 10),
                  PreconditionError);
}

TEST_CASE("lemma_dd_ratio") {
  CHECK(lemma_dd_ratio(100, 50) == 50.0);
  CHECK(lemma_dd_ratio(2, 7.5) == 7.5);
  for (auto [Y, N] : std::vector<std::pair<double, double>>{
           {1e2, 1e2}, {1e3, 1e2}, {1e4, 1e3}, {1e4, 50}, {1e5, 300}, {1e6, 1e3}}) {
    CHECK(lemma_dd_ratio(Y, N) >= std::floor(N));
  }
  for (auto [Y, N] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {100, 50}, {1000, 100}, {10000, 300}}) {
    for (auto lower : {WindowLower::Lambda, WindowLower::LambdaSquared}) {
      const double ours = lemma_dd_ratio(static_cast<double>(Y), static_cast<double>(N), lower);
      CHECK(ours == doctest::Approx(oracle::dd_ratio(Y, N, lower)).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(lemma_dd_ratio(0.5, 3), PreconditionError);
}

TEST_CASE("prime window") {
  const auto w = prime_window(1e4, WindowLower::Lambda);
  CHECK(w.lambda == doctest::Approx(std::sqrt(std::log(1e4) * std::log(std::log(1e4)))));
  CHECK(w.lo == w.lambda);
  CHECK(prime_window(1e4, WindowLower::LambdaSquared).lo == doctest::Approx(w.lambda * w.lambda));
  CHECK(std::isnan(prime_window(2.0, WindowLower::Lambda).lambda));
}
