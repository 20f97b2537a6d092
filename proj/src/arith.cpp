#include "qcs/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

namespace {

std::vector<std::uint32_t> build_sieve(std::uint32_t limit) {
  // odd-only: index i stands for 2i + 1
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p) composite[q / 2] = true;
  }
  std::vector<std::uint32_t> primes;
  primes.reserve(700'000);
  primes.push_back(2);
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return primes;
}

constexpr std::uint64_t kFactorLimit =
    static_cast<std::uint64_t>(kSieveLimit) * kSieveLimit;

std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

void check_factor_range(std::uint64_t m) {
  if (m > kFactorLimit) {
    throw RangeError("integer " + std::to_string(m) +
                     " exceeds the factorization range");
  }
}

// Jacobi symbol (a/n) for odd n > 0, 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  int t = 1;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    const auto r = n & 7u;
    if ((twos & 1) && (r == 3 || r == 5)) t = -t;
    std::swap(a, n);
    if ((a & 3u) == 3 && (n & 3u) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

// Squarefree flags for the integers a..b (1 <= a <= b).
std::vector<bool> squarefree_flags(std::uint64_t a, std::uint64_t b) {
  check_factor_range(b);
  std::vector<bool> flags(b - a + 1, true);
  for (std::uint64_t p : sieve_primes()) {
    const std::uint64_t sq = p * p;
    if (sq > b) break;
    for (std::uint64_t v = (a + sq - 1) / sq * sq; v <= b; v += sq) flags[v - a] = false;
  }
  return flags;
}

// Appends the fundamental discriminants sign * e for e in [a, b] to out,
// ascending in d.
void collect_fundamental(std::uint64_t a, std::uint64_t b, int sign,
                         std::vector<std::int64_t>& out) {
  if (a > b) return;
  const auto sf = squarefree_flags(a, b);
  const std::uint64_t qa = std::max<std::uint64_t>(1, (a + 3) / 4);
  const std::uint64_t qb = b / 4;
  const auto sf_quarter = qa <= qb ? squarefree_flags(qa, qb) : std::vector<bool>{};

  auto accept = [&](std::uint64_t e) {
    const auto d = sign * static_cast<std::int64_t>(e);
    const auto r = mod4(d);
    if (r == 1) return static_cast<bool>(sf[e - a]);
    if (r == 0) {
      const auto m = d / 4;
      const auto rm = mod4(m);
      return (rm == 2 || rm == 3) && sf_quarter[e / 4 - qa];
    }
    return false;
  };

  if (sign > 0) {
    for (std::uint64_t e = a; e <= b; ++e) {
      if (accept(e)) out.push_back(static_cast<std::int64_t>(e));
    }
  } else {
    for (std::uint64_t e = b; e >= a; --e) {
      if (accept(e)) out.push_back(-static_cast<std::int64_t>(e));
      if (e == a) break;
    }
  }
}

}  // namespace

std::span<const std::uint32_t> sieve_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve(kSieveLimit);
  return primes;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n <= static_cast<std::int64_t>(kSieveLimit)) {
    const auto primes = sieve_primes();
    return std::binary_search(primes.begin(), primes.end(),
                              static_cast<std::uint32_t>(n));
  }
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  if (bound > static_cast<std::int64_t>(kSieveLimit)) {
    throw RangeError("prime bound " + std::to_string(bound) + " exceeds the sieve");
  }
  std::vector<std::int64_t> out;
  for (std::uint32_t p : sieve_primes()) {
    if (static_cast<std::int64_t>(p) > bound) break;
    out.push_back(p);
  }
  return out;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  std::uint64_t m = magnitude(n);
  check_factor_range(m);
  std::vector<PrimePower> out;
  if (m <= 1) return out;
  for (std::uint64_t p : sieve_primes()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    int e = 0;
    do {
      m /= p;
      ++e;
    } while (m % p == 0);
    out.push_back({static_cast<std::int64_t>(p), e});
  }
  if (m > 1) out.push_back({static_cast<std::int64_t>(m), 1});
  return out;
}

int kronecker(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0 && d < 0) result = -1;
  std::uint64_t m = magnitude(n);

  const int twos = std::countr_zero(m);
  if (twos > 0) {
    if (d % 2 == 0) return 0;
    m >>= twos;
    const auto r = ((d % 8) + 8) % 8;
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
  }
  if (m == 1) return result;

  const auto wide = static_cast<__int128>(d) % static_cast<__int128>(m);
  const auto a = static_cast<std::uint64_t>(wide < 0 ? wide + m : wide);
  return result * jacobi(a, m);
}

bool is_squarefree(std::int64_t n) {
  require(n != 0, "is_squarefree: n must be nonzero");
  std::uint64_t m = magnitude(n);
  check_factor_range(m);
  for (std::uint64_t p : sieve_primes()) {
    if (p * p > m) break;
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

bool is_fundamental(std::int64_t d) {
  require(d != 0, "is_fundamental: d must be nonzero");
  if (d == 1) return true;
  const auto r = mod4(d);
  if (r == 1) return is_squarefree(d);
  if (r == 0) {
    const auto m = d / 4;
    const auto rm = mod4(m);
    return (rm == 2 || rm == 3) && is_squarefree(m);
  }
  return false;
}

Discriminant::Discriminant(std::int64_t value) : value_(value) {
  if (value == 0 || !is_fundamental(value)) {
    throw PreconditionError(std::to_string(value) +
                            " is not a fundamental discriminant");
  }
}

std::vector<Discriminant> enumerate_fundamental(std::int64_t lo, std::int64_t hi,
                                                bool include_unit) {
  require(lo < hi, "enumerate_fundamental: need lo < hi");
  std::vector<std::int64_t> raw;
  // negative part: lo < d <= min(hi, -1), i.e. |d| in [max(1, -min(hi,-1)), -lo - 1]
  if (lo < -1) {
    const auto top = magnitude(lo) - 1;
    const auto bottom = hi <= -1 ? magnitude(hi) : 1;
    collect_fundamental(bottom, top, -1, raw);
  }
  if (hi >= 1) {
    const auto bottom = lo >= 0 ? static_cast<std::uint64_t>(lo) + 1 : 1;
    collect_fundamental(bottom, static_cast<std::uint64_t>(hi), +1, raw);
  }

  std::vector<Discriminant> out;
  out.reserve(raw.size());
  for (auto d : raw) {
    if (d == 1 && !include_unit) continue;
    out.push_back(Discriminant(d, Discriminant::Trusted{}));
  }
  return out;
}

SquarefreeDecomposition squarefree_decompose(std::int64_t n) {
  require(n >= 1, "squarefree_decompose: n must be positive");
  SquarefreeDecomposition out{1, 1};
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) out.n0 *= p;
    for (int i = 0; i < e / 2; ++i) out.n1 *= p;
  }
  return out;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::int64_t largest_prime_factor(std::int64_t n) {
  require(n >= 1, "largest_prime_factor: n must be positive");
  const auto f = factorize(n);
  return f.empty() ? 1 : f.back().prime;
}

std::int64_t divisor_count(std::int64_t m) {
  require(m >= 1, "divisor_count: m must be positive");
  std::int64_t count = 1;
  for (const auto& pe : factorize(m)) count *= pe.exponent + 1;
  return count;
}

std::int64_t radical(std::int64_t n) {
  require(n >= 1, "radical: n must be positive");
  std::int64_t r = 1;
  for (const auto& pe : factorize(n)) r *= pe.prime;
  return r;
}

bool is_smooth(std::int64_t n, double y) {
  return static_cast<double>(largest_prime_factor(n)) <= y;
}

namespace {

std::vector<std::int64_t> smooth_primes(std::int64_t limit, double y) {
  const auto ybound = static_cast<std::int64_t>(std::min<double>(std::floor(y),
      static_cast<double>(limit)));
  return primes_up_to(ybound);
}

std::int64_t count_smooth(std::int64_t value, std::size_t from,
                          const std::vector<std::int64_t>& primes,
                          std::int64_t limit) {
  std::int64_t count = 1;
  for (std::size_t j = from; j < primes.size(); ++j) {
    if (primes[j] > limit / value) break;
    count += count_smooth(value * primes[j], j, primes, limit);
  }
  return count;
}

}  // namespace

std::vector<std::int64_t> enumerate_smooth(double x, double y) {
  require(x >= 1.0 && y >= 1.0, "enumerate_smooth: need x >= 1 and y >= 1");
  const auto limit = floor_to_count(x);
  std::vector<std::int64_t> out{1};
  for (auto p : smooth_primes(limit, y)) {
    const auto existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      for (auto v = out[i]; v <= limit / p;) {
        v *= p;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t psi_count(double x, double y) {
  require(x >= 1.0 && y >= 1.0, "psi_count: need x >= 1 and y >= 1");
  const auto limit = floor_to_count(x);
  if (y >= static_cast<double>(limit)) return limit;
  return count_smooth(1, 0, smooth_primes(limit, y), limit);
}

ErrorFactors error_factors(std::int64_t n, double eps) {
  require(n >= 1, "error_factors: n must be positive");
  require(eps > 0.0 && eps < 0.5, "error_factors: eps must lie in (0, 1/2)");
  const auto [n0, n1] = squarefree_decompose(n);
  ErrorFactors out{1.0, 1.0};
  if (n0 > 1) out.f = std::exp(std::pow(std::log(static_cast<double>(n0)), 1.0 - eps));
  for (const auto& pe : factorize(n1)) {
    out.g *= 1.0 + std::pow(static_cast<double>(pe.prime), -(0.5 + eps));
  }
  return out;
}

}  // namespace qcs
