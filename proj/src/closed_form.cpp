#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

double cosh_minus_one(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

double l32_numerator(double x) {
  const double ax = std::fabs(x);
  if (ax < 1.5) {
    // sum_{k>=2} x^{2k} (2k-1) / (2k)!
    const double x2 = x * x;
    double term = x2 * x2 / 8.0;
    double sum = 0.0;
    for (int k = 2; k < 40; ++k) {
      sum += term;
      term *= x2 / ((2.0 * k - 1.0) * (2.0 * k + 2.0));
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  return 1.0 - std::cosh(x) + x * std::sinh(x) - 0.5 * x * x;
}

Evaluation struve_closed_form(double nu, double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error("struve_closed_form requires finite x > 0, got " + std::to_string(x));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double root = std::sqrt(2.0 / (std::numbers::pi * x));

  Evaluation e;
  e.method = Method::closed_form;
  e.terms_used = 0;
  if (nu == -0.5) {
    e.value = root * std::sinh(x);
    e.abs_error_est = 4.0 * eps * std::fabs(e.value);
  } else if (nu == 0.5) {
    e.value = root * cosh_minus_one(x);
    e.abs_error_est = 6.0 * eps * std::fabs(e.value);
  } else if (nu == 1.5) {
    // -sqrt(x/(2 pi)) (1 - 2/x^2) + sqrt(2/(pi x)) (sinh x - cosh x / x)
    //   = sqrt(2/pi) x^{-3/2} (1 - cosh x + x sinh x - x^2/2)
    const double scale = root / x;
    e.value = scale * l32_numerator(x);
    const double magnitude = x < 1.5 ? l32_numerator(x)
                                     : 1.0 + std::cosh(x) + x * std::sinh(x) + 0.5 * x * x;
    e.abs_error_est = 8.0 * eps * scale * magnitude;
  } else {
    throw domain_error("struve_closed_form is available for nu in {-1/2, 1/2, 3/2} only, got " +
                       std::to_string(nu));
  }
  return e;
}

}  // namespace modstruve
