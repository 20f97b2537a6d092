#pragma once

// GCD sums  sum_{m,n in M} sqrt((m,n)/[m,n])  over sets of squarefree
// integers, plus a deterministic constructor for sets with large GCD sums.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qcs/executor.hpp"

namespace qcs {

class GcdSet {
 public:
  // Members must be positive, squarefree and distinct; order is irrelevant.
  explicit GcdSet(std::vector<std::int64_t> members);

  std::span<const std::int64_t> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  // y_M = max P+(m) over the members.
  std::int64_t smoothness() const { return smoothness_; }

  bool operator==(const GcdSet&) const = default;

 private:
  std::vector<std::int64_t> members_;
  std::int64_t smoothness_ = 1;
};

// All ordered pairs, diagonal included. Uses (m,n)/[m,n] = 1/(m' n') with
// m' = m/(m,n), n' = n/(m,n), and sums the upper triangle once.
double gcd_sum(const GcdSet& set, const Executor& executor = Executor{});

struct ExtremalSetChoice {
  GcdSet set;
  int prime_count;       // k: primes per member
  std::size_t pool_size; // smallest primes the members are drawn from
};

// N squarefree integers, each a product of exactly k distinct primes taken
// from the smallest pool of primes with C(pool, k) >= N; the N smallest such
// products are kept. k in 1..6 is picked by the largest GCD sum on a pilot
// prefix of each candidate (ties go to the smaller k).
ExtremalSetChoice construct_extremal_choice(std::size_t N);
GcdSet construct_extremal_set(std::size_t N);

// N exp(2 sqrt(log N log_3 N / log_2 N)); reference curve only, N >= 16.
double gcd_sum_reference(double N);

// Newline-delimited integers; blank lines and '#' comments are skipped.
GcdSet read_gcd_set(const std::filesystem::path& path);
void write_gcd_set(const std::filesystem::path& path, const GcdSet& set);

}  // namespace qcs
