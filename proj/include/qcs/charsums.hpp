#pragma once

// Exact quadratic character sums S_d(x) = sum_{n <= x} chi_d(n) and their
// maxima over windows of fundamental discriminants.

#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/arith.hpp"
#include "qcs/executor.hpp"

namespace qcs {

// S_d(x) with x floored; 0 for x < 1. For d != 1 the sum is reduced modulo
// the period |d| first.
std::int64_t char_sum(const Discriminant& d, double x);

// Convenience overload: validates d.
std::int64_t char_sum(std::int64_t d, double x);

struct CharSumProfile {
  Discriminant d;
  std::vector<std::int64_t> cutoffs;
  std::vector<std::int64_t> values;
};

// Running sums S_d(1), ..., S_d(x_max), term by term.
CharSumProfile char_sum_prefix(const Discriminant& d, std::int64_t x_max);

// Discriminant window lo < d <= hi.
struct Window {
  std::int64_t lo;
  std::int64_t hi;

  // (X, 2X] for real X.
  static Window doubling(double X);
};

struct MaxSearchResult {
  Window window;
  std::int64_t x;
  Discriminant argmax_d;
  std::int64_t max_value;
  std::int64_t count_scanned;
  // max |S_d(x)| and its smallest maximizer, filled when requested.
  std::optional<Discriminant> argmax_abs_d;
  std::optional<std::int64_t> max_abs_value;
};

struct DeltaMaxOptions {
  bool include_unit = false;
  bool report_abs = false;
};

// Exhaustive maximum of the signed sum S_d(x) over fundamental d in the
// window; ties go to the smallest d. Throws EmptyWindowError when the window
// holds no admissible discriminant.
MaxSearchResult delta_max(Window window, double x, const DeltaMaxOptions& options = {},
                          const Executor& executor = Executor{});

// sqrt|d| * log|d|, the Polya-Vinogradov scale. Requires |d| >= 2.
double pv_baseline(const Discriminant& d);
double pv_baseline(std::int64_t d);

}  // namespace qcs
