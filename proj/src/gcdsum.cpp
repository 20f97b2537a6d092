#include "qcs/gcdsum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "qcs/arith.hpp"
#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

GcdSet::GcdSet(std::vector<std::int64_t> members) : members_(std::move(members)) {
  require(!members_.empty(), "GcdSet: the set must be nonempty");
  std::sort(members_.begin(), members_.end());
  require(std::adjacent_find(members_.begin(), members_.end()) == members_.end(),
          "GcdSet: members must be distinct");
  for (auto m : members_) {
    require(m >= 1, "GcdSet: members must be positive");
    require(is_squarefree(m), "GcdSet: " + std::to_string(m) + " is not squarefree");
    smoothness_ = std::max(smoothness_, largest_prime_factor(m));
  }
}

namespace {

constexpr std::size_t kRowsPerTask = 64;
constexpr std::size_t kPilotSize = 2000;
constexpr int kMaxPrimesPerMember = 6;

}  // namespace

double gcd_sum(const GcdSet& set, const Executor& executor) {
  const auto m = set.members();
  const auto n = m.size();
  const auto tasks = (n + kRowsPerTask - 1) / kRowsPerTask;
  const auto partials = executor.map(tasks, [&](std::size_t t) {
    CompensatedSum part;
    const auto end = std::min(n, (t + 1) * kRowsPerTask);
    for (auto i = t * kRowsPerTask; i < end; ++i) {
      for (auto j = i + 1; j < n; ++j) {
        const auto g = std::gcd(m[i], m[j]);
        const auto a = static_cast<double>(m[i] / g);
        const auto b = static_cast<double>(m[j] / g);
        part.add(1.0 / std::sqrt(a * b));
      }
    }
    return part;
  });
  CompensatedSum off_diagonal;
  for (const auto& part : partials) off_diagonal.merge(part);
  return static_cast<double>(n) + 2.0 * off_diagonal.value();
}

namespace {

double binomial(std::size_t n, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

void subset_products(std::span<const std::uint32_t> pool, std::size_t from, int remaining,
                     std::int64_t product, std::vector<std::int64_t>& out) {
  if (remaining == 0) {
    out.push_back(product);
    return;
  }
  for (auto i = from; i + remaining <= pool.size(); ++i) {
    subset_products(pool, i + 1, remaining - 1, product * pool[i], out);
  }
}

}  // namespace

ExtremalSetChoice construct_extremal_choice(std::size_t N) {
  require(N >= 1, "construct_extremal_set: N must be positive");
  const auto primes = sieve_primes();

  std::optional<ExtremalSetChoice> best;
  double best_score = 0.0;
  for (int k = 1; k <= kMaxPrimesPerMember; ++k) {
    std::size_t pool = static_cast<std::size_t>(k);
    while (pool <= primes.size() && binomial(pool, k) < static_cast<double>(N)) ++pool;
    if (pool > primes.size()) continue;

    std::vector<std::int64_t> products;
    subset_products(primes.first(pool), 0, k, 1, products);
    std::sort(products.begin(), products.end());
    products.resize(N);

    const auto pilot_size = std::min(N, kPilotSize);
    const double score = gcd_sum(GcdSet({products.begin(), products.begin() + pilot_size}));
    if (!best || score > best_score * (1.0 + 1e-12)) {
      best.emplace(ExtremalSetChoice{GcdSet(std::move(products)), k, pool});
      best_score = score;
    }
  }
  return std::move(*best);
}

GcdSet construct_extremal_set(std::size_t N) { return construct_extremal_choice(N).set; }

double gcd_sum_reference(double N) {
  require(N >= 16.0, "gcd_sum_reference: need N >= 16");
  const double l1 = iterated_log(N, 1);
  const double l2 = iterated_log(N, 2);
  const double l3 = iterated_log(N, 3);
  return N * std::exp(2.0 * std::sqrt(l1 * l3 / l2));
}

GcdSet read_gcd_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file " + path.string());
  std::vector<std::int64_t> members;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::int64_t value = 0;
    if (!(fields >> value)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw PreconditionError(path.string() + ":" + std::to_string(lineno) +
                              ": expected an integer");
    }
    std::string rest;
    if (fields >> rest) {
      throw PreconditionError(path.string() + ":" + std::to_string(lineno) +
                              ": trailing characters after integer");
    }
    members.push_back(value);
  }
  return GcdSet(std::move(members));
}

void write_gcd_set(const std::filesystem::path& path, const GcdSet& set) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file " + path.string());
  for (auto m : set.members()) out << m << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qcs
