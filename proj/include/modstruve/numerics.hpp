#pragma once

#include <cmath>
#include <numbers>
#include <span>

namespace modstruve {

/// Truncation policy shared by every series evaluator.
struct AccuracySpec {
  double rel_tol = 1e-14;
  int max_terms = 500;

  /// Throws domain_error unless 0 < rel_tol < 1 and max_terms >= 1.
  void validate() const;
};

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kLnSqrtPi = 0.57236494292470008707;

/// ln Gamma(a) for a > 0. Stirling series after an upward recurrence lift to a >= 10;
/// exact factorials for integer a <= 171.
double lgamma(double a);

/// 1/Gamma(a) for every real a; exactly 0 at the poles a = 0, -1, -2, ...
double recip_gamma(double a);

/// psi(a) = Gamma'(a)/Gamma(a) for a > 0.
double digamma(double a);

/// ln (a)_n = ln Gamma(a+n) - ln Gamma(a), a > 0.
double log_pochhammer(double a, int n);

/// sin(pi a) with exact zeros at the integers.
double sin_pi(double a);

/// Neumaier-compensated accumulator. Throws overflow_error when a partial sum leaves
/// the representable range.
class CompensatedSum {
 public:
  void add(double v);
  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return sum_ + carry_; }
  /// Running sum of |terms|; the error of value() is bounded by 2 eps times this.
  double abs_sum() const { return abs_sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
  double abs_sum_ = 0.0;
};

double compensated_sum(std::span<const double> terms);

}  // namespace modstruve
