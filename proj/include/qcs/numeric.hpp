#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qcs {

// Neumaier's variant of Kahan summation. Partial sums from disjoint ranges
// can be merged; merging in a fixed order gives reproducible totals.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// log_j: the j-th iterate of the natural logarithm (log_1 = log). Returns
// NaN once an intermediate value is non-positive.
inline double iterated_log(double x, int j) {
  for (int i = 0; i < j; ++i) {
    if (!(x > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    x = std::log(x);
  }
  return x;
}

// floor(x) as an integer, clamped below at 0.
inline std::int64_t floor_to_count(double x) {
  if (!(x >= 1.0)) return 0;
  return static_cast<std::int64_t>(std::floor(x));
}

inline bool relative_close(double a, double b, double tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * scale;
}

}  // namespace qcs
