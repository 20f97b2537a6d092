#pragma once

// Resonators R(d) and the moment ratio
//
//   M1 = sum_{X < d <= 2X} R(d)^2,   M2 = sum_{X < d <= 2X} S_d(x)^j R(d)^2,
//
// for j = 1 (plain) or j = 2 (squared). Since the weights R(d)^2 are
// nonnegative, max S_d(x)^j >= M2/M1 holds for every resonator; the
// constructions below choose R to make the ratio large.
//
// Three resonators are provided:
//   Short   R(d) = prod_{p <= y} (1 - a_p chi_d(p))^-1,
//           a_p = 1 - log y / (log x (log_2 X)^(1+delta)),
//           y = (1/4 - alpha) log X log_2 X / max(log_2 x - log_3 X, log_3 X).
//   Medium  R(d) = sum_{n <= y} r(n) chi_d(n), r multiplicative on squarefree
//           n, r(p) = lambda / (sqrt(p) log p) for p in
//           [lambda^2 (or lambda), exp((log lambda)^2)], y = X^(1/2-delta)/x^2,
//           lambda = sqrt(log y log_2 y).
//   Long    R(d) = sum_{m in M} chi_d(m), |M| = floor(X^(1/2-delta)/x), M a
//           set with a large GCD sum.

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qcs/arith.hpp"
#include "qcs/charsums.hpp"
#include "qcs/executor.hpp"
#include "qcs/gcdsum.hpp"

namespace qcs {

enum class ResonatorVariant { Short, Medium, Long };

std::string_view to_string(ResonatorVariant variant);
ResonatorVariant parse_variant(std::string_view name);

// Lower end of the prime window for the sum-type resonator.
enum class WindowLower { Lambda, LambdaSquared };

struct ShortResonator {
  double y;
  std::vector<std::int64_t> primes;  // every prime p <= y
  std::vector<double> coefficients;  // a_p, aligned with primes
};

// A squarefree n in the support of r, with r(n).
struct SupportTerm {
  std::int64_t n;
  double weight;
};

struct MediumResonator {
  double y;
  double lambda;  // NaN when y is too small for log_2 y > 0
  WindowLower lower;
  std::vector<std::int64_t> primes;  // window primes <= y
  std::vector<SupportTerm> support;  // ascending n <= y; always starts with n = 1
};

struct LongResonator {
  std::int64_t N;
  GcdSet set;
};

struct ResonatorSpec {
  ResonatorVariant variant;
  double X;
  double x;
  double alpha;
  double delta;
  std::variant<ShortResonator, MediumResonator, LongResonator> data;
};

// Derives every parameter from (X, x, alpha, delta). Requires X >= 16,
// x >= 2, 0 < alpha, delta < 1/4, and delta < alpha for Short. A Medium
// window may be empty (R = 1); a Long set must be nonempty.
ResonatorSpec build_resonator(ResonatorVariant variant, double X, double x,
                              double alpha = 0.01, double delta = 0.01);

// Short resonator with explicit primes and coefficients, |a_p| < 1. y defaults
// to the largest prime.
ResonatorSpec make_short_resonator(double X, double x, std::vector<std::int64_t> primes,
                                   std::vector<double> coefficients, double y = 0.0);

// Medium resonator with an explicit length y.
ResonatorSpec make_medium_resonator(double X, double x, double y,
                                    WindowLower lower = WindowLower::LambdaSquared,
                                    double delta = 0.01);

// Long resonator over a caller-supplied set.
ResonatorSpec make_long_resonator(double X, double x, GcdSet set, double delta = 0.01);

// Squarefree products n <= bound of the given primes with
// weight(n) = prod weight(p), ascending in n.
std::vector<SupportTerm> squarefree_support(std::span<const std::int64_t> primes,
                                            std::span<const double> weights,
                                            double bound);

double resonator_value(const ResonatorSpec& spec, const Discriminant& d);

struct RatioReport {
  ResonatorSpec spec;
  Window window;
  std::int64_t x;
  double M1;
  double M2;
  double ratio;
  double observed_max;
  bool squared;
  bool inequality_holds;
  std::int64_t discriminants_scanned;
};

inline constexpr double kRatioTolerance = 1e-9;

// Scans the fundamental d in (X, 2X] in fixed chunks on the executor.
// Throws EmptyWindowError for an empty window.
RatioReport moment_ratio(const ResonatorSpec& spec, bool squared,
                         const Executor& executor = Executor{});

// Single sequential pass over the given discriminants, in the given order.
RatioReport moment_ratio_over(const ResonatorSpec& spec, bool squared,
                              std::span<const Discriminant> discriminants);

struct ShortChainReport {
  double bound;      // sum_{k <= x, k in S(y)} a_k prod_{p | k} p/(p+1)
  double plain_sum;  // sum_{k <= x, k in S(y)} a_k
  std::int64_t psi;  // Psi(x, y)
  std::int64_t terms;
};

ShortChainReport short_chain_bound(const ResonatorSpec& spec, double x);

// Ratio of the diagonal-type sum
//   sum_{a,b <= Y} sum_{m,n <= N, an = bm} r(a) r(b) / sum_{n <= Y} r(n)^2
// for r(p) = lambda/(sqrt(p) log p), lambda = sqrt(log Y log_2 Y). Returns N
// exactly when the prime window is empty.
double lemma_dd_ratio(double Y, double N, WindowLower lower = WindowLower::Lambda);

// The prime window [lo, hi] used by the sum-type resonators, for a given y.
struct PrimeWindow {
  double lambda;
  double lo;
  double hi;
};
PrimeWindow prime_window(double y, WindowLower lower);

}  // namespace qcs
