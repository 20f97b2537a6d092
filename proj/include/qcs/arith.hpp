#pragma once

// Exact integer primitives for quadratic characters: the Kronecker symbol,
// fundamental discriminants, squarefree kernels, smooth numbers.
//
// Factorization is trial division by a prime table built once on first use
// (primes up to kSieveLimit), so inputs up to kSieveLimit^2 factor exactly.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qcs {

inline constexpr std::uint32_t kSieveLimit = 10'000'000;

// Ascending primes p <= kSieveLimit. Built on first call, read-only after.
std::span<const std::uint32_t> sieve_primes();

bool is_prime(std::int64_t n);

// Primes p <= bound, ascending. bound must not exceed kSieveLimit.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of |n| in ascending prime order; empty for |n| <= 1.
// Throws RangeError when |n| exceeds kSieveLimit^2.
std::vector<PrimePower> factorize(std::int64_t n);

// Kronecker symbol (d/n), defined for every pair of integers:
//   (d/0) = 1 if |d| = 1, else 0;
//   (d/-1) = -1 if d < 0, else 1;
//   (d/2) = 0 for even d, +1 for d = +-1 mod 8, -1 for d = +-3 mod 8;
//   Jacobi symbol for odd positive n.
// For a fundamental discriminant d this is the real primitive character
// chi_d(n).
int kronecker(std::int64_t d, std::int64_t n);

bool is_squarefree(std::int64_t n);

// d = 1, or d = 1 mod 4 squarefree, or d = 4m with m = 2, 3 mod 4 squarefree.
// d = 0 is rejected with PreconditionError.
bool is_fundamental(std::int64_t d);

// A fundamental discriminant. Construction from any other integer throws.
class Discriminant {
 public:
  explicit Discriminant(std::int64_t value);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return value_ < 0 ? -value_ : value_; }
  bool is_unit() const { return value_ == 1; }

  int chi(std::int64_t n) const { return kronecker(value_, n); }

  auto operator<=>(const Discriminant&) const = default;

 private:
  struct Trusted {};
  Discriminant(std::int64_t value, Trusted) : value_(value) {}
  friend std::vector<Discriminant> enumerate_fundamental(std::int64_t,
                                                         std::int64_t, bool);

  std::int64_t value_;
};

// Fundamental d with lo < d <= hi, ascending. Uses a segmented squarefree
// sieve over the window rather than per-element trial division.
std::vector<Discriminant> enumerate_fundamental(std::int64_t lo,
                                                std::int64_t hi,
                                                bool include_unit);

// n = n0 * n1^2 with n0 squarefree.
struct SquarefreeDecomposition {
  std::int64_t n0;
  std::int64_t n1;

  bool operator==(const SquarefreeDecomposition&) const = default;
};

SquarefreeDecomposition squarefree_decompose(std::int64_t n);

bool is_perfect_square(std::int64_t n);

// P+(n), with P+(1) = 1.
std::int64_t largest_prime_factor(std::int64_t n);

std::int64_t divisor_count(std::int64_t m);

// Product of the distinct primes dividing n.
std::int64_t radical(std::int64_t n);

bool is_smooth(std::int64_t n, double y);

// Smoothness range: n <= x with every prime factor <= y.
struct SmoothnessParams {
  double x;
  double y;
};

// All y-smooth n <= x, ascending. Always contains 1.
std::vector<std::int64_t> enumerate_smooth(double x, double y);

// Psi(x, y) = #{n <= x : P+(n) <= y}, counted without materializing the set.
std::int64_t psi_count(double x, double y);

struct ErrorFactors {
  double f;  // exp((log n0)^(1 - eps))
  double g;  // sum over d | n1 of mu(d)^2 / d^(1/2 + eps)
};

// Error-term factors of the GRH mean-value bound, evaluated on the
// squarefree kernel n0 and cokernel n1 of n. eps in (0, 1/2).
ErrorFactors error_factors(std::int64_t n, double eps = 0.05);

}  // namespace qcs
