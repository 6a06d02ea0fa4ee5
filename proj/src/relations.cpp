#include "modstruve/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

namespace {

void require_order(double nu, double lower, const char* who) {
  if (!(nu > lower) || !std::isfinite(nu))
    throw domain_error(std::string(who) + " requires nu > " + std::to_string(lower) + ", got " +
                       std::to_string(nu));
}

// terms: the largest magnitude among the summands on either side, so that cancellation
// between large evaluations is not charged to the identity
ResidualReport make_report(const char* name, double nu, double x, double lhs, double rhs,
                           double scale, double terms = 0.0) {
  ResidualReport r;
  r.identity_name = name;
  r.nu = nu;
  r.x = x;
  r.residual = lhs - rhs;
  r.scale = std::max({std::fabs(lhs), std::fabs(rhs), std::fabs(scale), std::fabs(terms)});
  if (!(r.scale > 0.0)) r.scale = 1.0;
  r.rel_residual = r.residual / r.scale;
  return r;
}

}  // namespace

double struve_inhomogeneity(double nu, double x) {
  require_order(nu, -1.5, "struve_inhomogeneity");
  return std::exp(nu * std::log(0.5 * x) - lgamma(nu + 1.5) - kLnSqrtPi);
}

ResidualReport residual_subtraction_recurrence(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -0.5, "residual_subtraction_recurrence");
  const double below = struve_l(nu - 1.0, x, budget).value;
  const double above = struve_l(nu + 1.0, x, budget).value;
  const double mid = struve_l(nu, x, budget).value;
  const double inh = struve_inhomogeneity(nu, x);
  return make_report("subtraction_recurrence", nu, x, below - above, 2.0 * nu / x * mid + inh, inh,
                     std::max(std::fabs(below), std::fabs(above)));
}

ResidualReport residual_derivative_recurrence(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -0.5, "residual_derivative_recurrence");
  const auto s = struve_series(nu, x, budget);
  const double below = struve_l(nu - 1.0, x, budget).value;
  const double lhs = x * s.derivative.value + nu * s.value.value;
  return make_report("derivative_recurrence", nu, x, lhs, x * below, struve_inhomogeneity(nu, x),
                     std::max(std::fabs(x * s.derivative.value), std::fabs(nu * s.value.value)));
}

ResidualReport residual_shift_recurrence(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "residual_shift_recurrence");
  const auto s = struve_series(nu, x, budget);
  const double above = struve_l(nu + 1.0, x, budget).value;
  const double inh = struve_inhomogeneity(nu, x);
  const double rhs = s.derivative.value - nu / x * s.value.value - inh;
  return make_report("shift_recurrence", nu, x, above, rhs, inh,
                     std::max(std::fabs(s.derivative.value), std::fabs(nu / x * s.value.value)));
}

ResidualReport residual_ode(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -0.5, "residual_ode");
  const auto s = struve_series(nu, x, budget);
  const double forcing =
      std::exp((nu - 1.0) * std::log(x) - (nu - 1.0) * std::numbers::ln2 - lgamma(nu + 0.5) - kLnSqrtPi);
  const double rhs = (1.0 + nu * nu / (x * x)) * s.value.value - s.derivative.value / x + forcing;
  return make_report("ode", nu, x, s.second_derivative.value, rhs, forcing,
                     std::max(std::fabs((1.0 + nu * nu / (x * x)) * s.value.value),
                              std::fabs(s.derivative.value / x)));
}

ResidualReport residual_xnu_derivative(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "residual_xnu_derivative");
  const auto s = struve_series(nu, x, budget);
  const double above = struve_l(nu + 1.0, x, budget).value;
  const double xpow = std::exp(-nu * std::log(x));
  const double lhs = xpow * (s.derivative.value - nu / x * s.value.value);
  const double constant = std::exp(-nu * std::numbers::ln2 - lgamma(nu + 1.5) - kLnSqrtPi);
  return make_report("xnu_derivative", nu, x, lhs, constant + xpow * above, constant,
                     xpow * std::max(std::fabs(s.derivative.value), std::fabs(nu / x * s.value.value)));
}

double turan_delta(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "turan_delta");
  const double mid = struve_l(nu, x, budget).value;
  const double below = struve_series(nu - 1.0, x, budget).value.value;
  const double above = struve_l(nu + 1.0, x, budget).value;
  return mid * mid - below * above;
}

ResidualReport turan_delta_identity(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -0.5, "turan_delta_identity");
  const auto s = struve_series(nu, x, budget);
  const double l = s.value.value;
  const double dl = s.derivative.value;
  const double below = struve_l(nu - 1.0, x, budget).value;
  const double direct = turan_delta(nu, x, budget);
  const double coupling =
      std::exp(nu * std::log(x) - nu * std::numbers::ln2 - lgamma(nu + 1.5) - kLnSqrtPi) * below;
  const double alt = (1.0 + nu * nu / (x * x)) * l * l - dl * dl + coupling;

  ResidualReport r;
  r.identity_name = "turan_delta";
  r.nu = nu;
  r.x = x;
  r.residual = direct - alt;
  r.scale = l * l;
  r.rel_residual = r.residual / r.scale;
  return r;
}

ResidualReport logderiv_bridge(double nu, double x, double h, const AccuracySpec& budget) {
  require_order(nu, -0.5, "logderiv_bridge");
  if (!(h > 0.0) || !(x - h > 0.0))
    throw domain_error("logderiv_bridge requires 0 < h < x");
  auto g = [&](double t) {
    const auto s = struve_series(nu, t, budget);
    return t * s.derivative.value / s.value.value;
  };
  const auto s = struve_series(nu, x, budget);
  const double l = s.value.value;
  const double dl = s.derivative.value;
  const double fd = l * l / x * (g(x + h) - g(x - h)) / (2.0 * h);
  const double coupling = (nu + 0.5) *
                          std::exp((nu - 1.0) * std::log(x) - (nu - 1.0) * std::numbers::ln2 -
                                   lgamma(nu + 1.5) - kLnSqrtPi) *
                          l;
  const double closed = (1.0 + nu * nu / (x * x)) * l * l - dl * dl + coupling;
  return make_report("logderiv_bridge", nu, x, fd, closed, 0.0);
}

}  // namespace modstruve
