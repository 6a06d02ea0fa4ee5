#include "modstruve/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/numerics.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

namespace {

// sinh/cosh of x*s stay finite for x below this
constexpr double kQuadMaxX = 700.0;

void check_quad_argument(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error(std::string(who) + " requires finite x > 0, got " + std::to_string(x));
  if (x > kQuadMaxX)
    throw range_error(std::string(who) + " is limited to x <= 700, got " + std::to_string(x));
}

Evaluation from_quadrature(double scale, const QuadratureResult& r, double offset = 0.0) {
  Evaluation e;
  e.value = offset + scale * r.value;
  e.abs_error_est = std::fabs(scale) * r.error_estimate;
  e.terms_used = r.levels_used;
  e.method = Method::quadrature;
  e.accuracy_warning = !r.converged;
  return e;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (levels < 3 || levels > 16)
    throw domain_error("QuadratureSpec.levels must lie in [3, 16], got " + std::to_string(levels));
  if (!(abs_tol >= 0.0))
    throw domain_error("QuadratureSpec.abs_tol must be >= 0");
}

Evaluation struve_l_quad(double nu, double x, const QuadratureSpec& q) {
  if (!(nu > -0.5) || !std::isfinite(nu))
    throw domain_error("struve_l_quad requires nu > -1/2, got " + std::to_string(nu));
  check_quad_argument(x, "struve_l_quad");

  const double power = 2.0 * nu;
  // t in [0, pi/2]; sin t and cos t taken from whichever endpoint distance is smaller
  auto integrand = [x, power](double, double from_zero, double from_right) {
    double sin_t = 0.0;
    double cos_t = 0.0;
    if (from_zero < from_right) {
      sin_t = std::sin(from_zero);
      cos_t = std::cos(from_zero);
    } else {
      sin_t = std::cos(from_right);
      cos_t = std::sin(from_right);
    }
    return std::sinh(x * cos_t) * std::pow(sin_t, power);
  };
  const auto r = tanh_sinh(integrand, 0.0, 0.5 * std::numbers::pi, q);
  const double scale = 2.0 * std::pow(0.5 * x, nu) * recip_gamma(nu + 0.5) / kSqrtPi;
  return from_quadrature(scale, r);
}

Evaluation struve_next_shifted(double nu, double x, const QuadratureSpec& q) {
  if (!(nu > -1.5) || !std::isfinite(nu))
    throw domain_error("struve_next_shifted requires nu > -3/2, got " + std::to_string(nu));
  check_quad_argument(x, "struve_next_shifted");

  // 1 - s^2 = d (2 - d) with d = 1 - s the distance to the right endpoint
  if (nu > -0.45) {
    const double power = nu - 0.5;
    auto integrand = [x, power](double s, double, double from_one) {
      return std::pow(from_one * (2.0 - from_one), power) * s * std::cosh(x * s);
    };
    const auto r = tanh_sinh(integrand, 0.0, 1.0, q);
    return from_quadrature(2.0 * (nu + 0.5) / kSqrtPi, r, -1.0 / kSqrtPi);
  }

  const double power = nu + 0.5;
  auto integrand = [x, power](double s, double, double from_one) {
    return std::pow(from_one * (2.0 - from_one), power) * std::sinh(x * s);
  };
  const auto r = tanh_sinh(integrand, 0.0, 1.0, q);
  return from_quadrature(x / kSqrtPi, r);
}

}  // namespace modstruve
