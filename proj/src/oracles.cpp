#include "qcs/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace qcs::oracle {

namespace {

std::vector<std::pair<std::int64_t, int>> trial_factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

struct Window {
  double lambda;
  double lo;
  double hi;
};

Window dd_window(double y, WindowLower lower) {
  if (!(y > std::exp(1.0))) return {0.0, 2.0, 0.0};
  const double lambda = std::sqrt(std::log(y) * std::log(std::log(y)));
  const double lo = lower == WindowLower::Lambda ? lambda : lambda * lambda;
  const double l = std::log(lambda);
  return {lambda, lo, std::exp(l * l)};
}

// r(n) for the sum-type resonators; 0 off the support.
double dd_weight(std::int64_t n, const Window& w) {
  double r = 1.0;
  for (const auto& [p, e] : trial_factor(n)) {
    const auto pd = static_cast<double>(p);
    if (e > 1 || pd < w.lo || pd > w.hi) return 0.0;
    r *= w.lambda / (std::sqrt(pd) * std::log(pd));
  }
  return r;
}

std::vector<std::pair<std::int64_t, double>> medium_support(double y, WindowLower lower) {
  const auto w = dd_window(y, lower);
  std::vector<std::pair<std::int64_t, double>> out;
  // n = 1 is always kept, so a degenerate resonator is R = 1 even for y < 1
  const auto top = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(y)));
  for (std::int64_t n = 1; n <= top; ++n) {
    const double r = dd_weight(n, w);
    if (r != 0.0) out.emplace_back(n, r);
  }
  return out;
}

double resonator_with(const ResonatorSpec& spec, std::int64_t d,
                      const std::vector<std::pair<std::int64_t, double>>& support) {
  if (const auto* s = std::get_if<ShortResonator>(&spec.data)) {
    long double value = 1.0L;
    for (std::size_t i = 0; i < s->primes.size(); ++i) {
      value /= 1.0L - s->coefficients[i] * chi(d, s->primes[i]);
    }
    return static_cast<double>(value);
  }
  if (std::holds_alternative<MediumResonator>(spec.data)) {
    long double value = 0.0L;
    for (const auto& [n, r] : support) value += r * chi(d, n);
    return static_cast<double>(value);
  }
  long double value = 0.0L;
  for (auto m : std::get<LongResonator>(spec.data).set.members()) value += chi(d, m);
  return static_cast<double>(value);
}

}  // namespace

int euler_criterion(std::int64_t d, std::int64_t p) {
  const auto v = pow_mod(d, (p - 1) / 2, p);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

int chi(std::int64_t d, std::int64_t n) {
  int value = 1;
  for (const auto& [p, e] : trial_factor(n)) {
    int at_p = 0;
    if (p == 2) {
      const auto r = ((d % 8) + 8) % 8;
      if (r == 1 || r == 7) at_p = 1;
      if (r == 3 || r == 5) at_p = -1;
    } else {
      at_p = euler_criterion(d, p);
    }
    for (int i = 0; i < e; ++i) value *= at_p;
  }
  return value;
}

bool is_squarefree(std::int64_t n) {
  n = n < 0 ? -n : n;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) return false;
  }
  return n != 0;
}

bool is_fundamental(std::int64_t d) {
  if (d == 1) return true;
  const auto r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const auto m = d / 4;
  const auto rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::int64_t largest_prime_factor(std::int64_t n) {
  const auto f = trial_factor(n);
  return f.empty() ? 1 : f.back().first;
}

std::int64_t char_sum(std::int64_t d, std::int64_t x) {
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= x; ++n) sum += chi(d, n);
  return sum;
}

std::vector<std::int64_t> fundamental_in(std::int64_t lo, std::int64_t hi, bool include_unit) {
  std::vector<std::int64_t> out;
  for (auto d = lo + 1; d <= hi; ++d) {
    if (d == 0 || (d == 1 && !include_unit)) continue;
    if (is_fundamental(d)) out.push_back(d);
  }
  return out;
}

std::int64_t psi(std::int64_t x, double y) {
  std::int64_t count = 0;
  for (std::int64_t n = 1; n <= x; ++n) {
    if (static_cast<double>(largest_prime_factor(n)) <= y) ++count;
  }
  return count;
}

double gcd_sum(std::span<const std::int64_t> members) {
  long double total = 0.0L;
  for (auto m : members) {
    for (auto n : members) {
      const auto g = static_cast<long double>(std::gcd(m, n));
      const auto l = static_cast<long double>(std::lcm(m, n));
      total += std::sqrt(g / l);
    }
  }
  return static_cast<double>(total);
}

double dd_ratio(std::int64_t Y, std::int64_t N, WindowLower lower) {
  const auto w = dd_window(static_cast<double>(Y), lower);
  std::vector<std::pair<std::int64_t, double>> supported;
  for (std::int64_t a = 1; a <= Y; ++a) {
    const double r = dd_weight(a, w);
    if (r != 0.0) supported.emplace_back(a, r);
  }
  long double numerator = 0.0L;
  long double denominator = 0.0L;
  for (const auto& [a, ra] : supported) {
    denominator += static_cast<long double>(ra) * ra;
    for (const auto& [b, rb] : supported) {
      std::int64_t solutions = 0;
      for (std::int64_t m = 1; m <= N; ++m) {
        for (std::int64_t n = 1; n <= N; ++n) {
          if (a * n == b * m) ++solutions;
        }
      }
      numerator += static_cast<long double>(ra) * rb * solutions;
    }
  }
  return static_cast<double>(numerator / denominator);
}

double resonator(const ResonatorSpec& spec, std::int64_t d) {
  std::vector<std::pair<std::int64_t, double>> support;
  if (const auto* m = std::get_if<MediumResonator>(&spec.data)) {
    support = medium_support(m->y, m->lower);
  }
  return resonator_with(spec, d, support);
}

Moments moment_ratio(const ResonatorSpec& spec, bool squared) {
  std::vector<std::pair<std::int64_t, double>> support;
  if (const auto* m = std::get_if<MediumResonator>(&spec.data)) {
    support = medium_support(m->y, m->lower);
  }
  const auto lo = static_cast<std::int64_t>(std::floor(spec.X));
  const auto hi = static_cast<std::int64_t>(std::floor(2.0 * spec.X));
  const auto x = static_cast<std::int64_t>(std::floor(spec.x));

  long double m1 = 0.0L;
  long double m2 = 0.0L;
  double best = -INFINITY;
  std::int64_t scanned = 0;
  for (auto d = lo + 1; d <= hi; ++d) {
    if (d == 1 || !is_fundamental(d)) continue;
    ++scanned;
    const auto s = static_cast<double>(char_sum(d, x));
    const double r = resonator_with(spec, d, support);
    const double value = squared ? s * s : s;
    m1 += static_cast<long double>(r) * r;
    m2 += static_cast<long double>(value) * r * r;
    best = std::max(best, value);
  }
  return {static_cast<double>(m1), static_cast<double>(m2), best, scanned};
}

double short_chain(std::span<const std::int64_t> primes, std::span<const double> coefficients,
                   std::int64_t x) {
  long double total = 0.0L;
  for (std::int64_t k = 1; k <= x; ++k) {
    long double a_k = 1.0L;
    long double euler = 1.0L;
    bool supported = true;
    for (const auto& [p, e] : trial_factor(k)) {
      const auto it = std::find(primes.begin(), primes.end(), p);
      if (it == primes.end()) {
        supported = false;
        break;
      }
      a_k *= std::pow(static_cast<long double>(coefficients[it - primes.begin()]), e);
      euler *= static_cast<long double>(p) / (p + 1);
    }
    if (supported) total += a_k * euler;
  }
  return static_cast<double>(total);
}

std::vector<std::int64_t> random_squarefree(std::mt19937_64& rng, std::size_t size,
                                            std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> draw(1, bound);
  std::set<std::int64_t> chosen;
  while (chosen.size() < size) {
    const auto v = draw(rng);
    if (is_squarefree(v)) chosen.insert(v);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace qcs::oracle
