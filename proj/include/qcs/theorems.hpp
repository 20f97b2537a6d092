#pragma once

// Reference curves for the three lower bounds, with every o(1) set to 0.
// These are reported next to observed maxima and never asserted.

#include <string_view>

#include "qcs/resonance.hpp"

namespace qcs {

// Psi(x, (1/4) log X log_2 X / max(log_2 x - log_3 X, log_3 X)).
double short_range_shape(double X, double x);

// sqrt(x) exp(sqrt(log X / log_2 X)).
double medium_range_shape(double X, double x);

// sqrt(x) exp(sqrt(log t log_3 t / log_2 t)), t = sqrt(X)/x. NaN when
// log_3 t <= 0.
double long_range_shape(double X, double x);

// sqrt(x) exp(sqrt(log y / log_2 y)): the square root of the diagonal-sum
// bound x exp(2 sqrt(log y / log_2 y)) for resonator length y.
double medium_diagonal_shape(double y, double x);

// Cutoff shorthands: log x = (log X)^sigma, and x = (log X)^A.
double x_from_sigma(double X, double sigma);
double x_from_power(double X, double A);

struct TheoremReport {
  std::string_view theorem;  // "1.1", "1.2" or "1.3"
  RatioReport ratio_report;
  double predicted_shape;
  double observed_max;
};

TheoremReport theorem_report(const RatioReport& report);

}  // namespace qcs
