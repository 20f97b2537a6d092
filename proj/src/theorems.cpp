#include "qcs/theorems.hpp"

#include <cmath>
#include <limits>

#include "qcs/arith.hpp"
#include "qcs/errors.hpp"
#include "qcs/numeric.hpp"

namespace qcs {

double short_range_shape(double X, double x) {
  const double denom = std::max(iterated_log(x, 2) - iterated_log(X, 3), iterated_log(X, 3));
  const double y = 0.25 * iterated_log(X, 1) * iterated_log(X, 2) / denom;
  if (!(y > 0.0) || x < 1.0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(psi_count(x, std::max(y, 1.0)));
}

double medium_range_shape(double X, double x) {
  return std::sqrt(x) * std::exp(std::sqrt(iterated_log(X, 1) / iterated_log(X, 2)));
}

double long_range_shape(double X, double x) {
  const double t = std::sqrt(X) / x;
  const double l3 = iterated_log(t, 3);
  if (!(l3 > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(x) * std::exp(std::sqrt(iterated_log(t, 1) * l3 / iterated_log(t, 2)));
}

double medium_diagonal_shape(double y, double x) {
  const double l2 = iterated_log(y, 2);
  if (!(l2 > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(x) * std::exp(std::sqrt(iterated_log(y, 1) / l2));
}

double x_from_sigma(double X, double sigma) {
  require(sigma > 0.0 && sigma < 0.5, "sigma must lie in (0, 1/2)");
  return std::exp(std::pow(std::log(X), sigma));
}

double x_from_power(double X, double A) {
  require(A > 1.0, "A must exceed 1");
  return std::pow(std::log(X), A);
}

TheoremReport theorem_report(const RatioReport& report) {
  const auto& spec = report.spec;
  switch (spec.variant) {
    case ResonatorVariant::Short:
      return {"1.1", report, short_range_shape(spec.X, spec.x), report.observed_max};
    case ResonatorVariant::Medium:
      return {"1.2", report, medium_range_shape(spec.X, spec.x), report.observed_max};
    case ResonatorVariant::Long:
      return {"1.3", report, long_range_shape(spec.X, spec.x), report.observed_max};
  }
  return {"", report, std::numeric_limits<double>::quiet_NaN(), report.observed_max};
}

}  // namespace qcs
