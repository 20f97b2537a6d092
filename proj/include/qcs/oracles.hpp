#pragma once

// Brute-force reference computations. Each routine avoids the code path it
// is used to check: characters come from Euler's criterion and trial
// factorization, sums from plain loops, no sieves, no period reduction.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qcs/resonance.hpp"

namespace qcs::oracle {

// d^((p-1)/2) mod p mapped to {-1, 0, 1}; p an odd prime.
int euler_criterion(std::int64_t d, std::int64_t p);

// chi_d(n) for fundamental d and n >= 1, multiplied out over the trial-division
// factorization of n, with chi_d(2) read off d mod 8.
int chi(std::int64_t d, std::int64_t n);

bool is_squarefree(std::int64_t n);
bool is_fundamental(std::int64_t d);
std::int64_t largest_prime_factor(std::int64_t n);

std::int64_t char_sum(std::int64_t d, std::int64_t x);

// Fundamental d with lo < d <= hi by testing every integer.
std::vector<std::int64_t> fundamental_in(std::int64_t lo, std::int64_t hi, bool include_unit);

// #{n <= x : P+(n) <= y} by testing every n.
std::int64_t psi(std::int64_t x, double y);

// Full ordered double loop of sqrt(gcd/lcm).
double gcd_sum(std::span<const std::int64_t> members);

// Quadruple loop over a, b <= Y (those with r(a), r(b) != 0) and m, n <= N.
double dd_ratio(std::int64_t Y, std::int64_t N, WindowLower lower);

// R(d) recomputed from the spec's parameters without the spec's cached
// support or the library Kronecker symbol.
double resonator(const ResonatorSpec& spec, std::int64_t d);

struct Moments {
  double M1;
  double M2;
  double max_value;
  std::int64_t scanned;
};

// Double loop: over every integer d in (X, 2X], then over n <= x.
Moments moment_ratio(const ResonatorSpec& spec, bool squared);

// sum_{k <= x} a_k prod_{p | k} p/(p+1) over every k whose primes all carry a
// coefficient, by testing each k <= x.
double short_chain(std::span<const std::int64_t> primes, std::span<const double> coefficients,
                   std::int64_t x);

// `size` distinct squarefree integers drawn uniformly from [1, bound].
std::vector<std::int64_t> random_squarefree(std::mt19937_64& rng, std::size_t size,
                                            std::int64_t bound);

}  // namespace qcs::oracle
