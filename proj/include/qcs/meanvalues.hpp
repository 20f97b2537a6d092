#pragma once

// Averages of chi_d(n) over fundamental discriminants, against the main term
// X/zeta(2) * prod_{p | n} p/(p+1) (present only for square n).

#include <cstdint>

#include "qcs/charsums.hpp"
#include "qcs/executor.hpp"

namespace qcs {

inline constexpr double kInverseZeta2 = 6.0 / (3.14159265358979323846 * 3.14159265358979323846);

// Sum of chi_d(n) over fundamental d with |d| <= X, both signs, d = 1 included.
std::int64_t mean_value_sum(std::int64_t n, double X, const Executor& executor = Executor{});

// Same sum restricted to lo < d <= hi.
std::int64_t mean_value_window_sum(std::int64_t n, Window window,
                                   const Executor& executor = Executor{});

// X/zeta(2) * prod_{p | n} p/(p+1) if n is a square, else 0.
double mean_value_main_term(std::int64_t n, double X);

struct MeanValueReport {
  std::int64_t n;
  double X;
  std::int64_t exact_sum;
  double main_term;
  double residual;
  // Error envelopes with every implied constant set to 1. Informational.
  double unconditional_envelope;
  double grh_envelope;
};

MeanValueReport mean_value_report(std::int64_t n, double X, double eps = 0.05,
                                  const Executor& executor = Executor{});

}  // namespace qcs
