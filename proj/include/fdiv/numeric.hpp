#pragma once

#include <algorithm>
#include <cmath>

namespace fdv {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Relative slack used by every inequality assertion: 1e-9 scaled by the larger side.
inline constexpr double kInequalityRelSlack = 1e-9;

inline double inequality_slack(double scale) {
  return kInequalityRelSlack * std::max(1.0, std::abs(scale));
}

/// lhs <= rhs up to an additive slack.
inline bool leq_within(double lhs, double rhs, double slack) { return lhs <= rhs + slack; }

}  // namespace fdv
