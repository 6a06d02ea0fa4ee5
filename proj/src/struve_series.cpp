#include <cmath>
#include <numbers>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/numerics.hpp"
#include "modstruve/struve.hpp"
#include "series_engine.hpp"

namespace modstruve {

namespace {

constexpr double kLgammaThreeHalves = -0.12078223763524522234;  // ln(sqrt(pi)/2)
constexpr double kLgammaFiveHalves = 0.28468287047291915963;    // ln(3 sqrt(pi)/4)

std::string fmt(double v) { return std::to_string(v); }

void require_order(double nu, double lower, const char* who) {
  if (!(nu > lower) || !std::isfinite(nu))
    throw domain_error(std::string(who) + " requires nu > " + fmt(lower) + ", got " + fmt(nu));
}

Evaluation make_eval(double value, double err, int terms) {
  Evaluation e;
  e.value = value;
  e.abs_error_est = err;
  e.terms_used = terms;
  e.method = Method::series;
  return e;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series:
      return "series";
    case Method::quadrature:
      return "quadrature";
    case Method::closed_form:
      return "closed_form";
  }
  return "unknown";
}

double struve_coeff_beta(double nu, int n) {
  require_order(nu, -1.5, "struve_coeff_beta");
  if (n < 0) throw domain_error("struve_coeff_beta requires n >= 0");
  return std::exp(-modstruve::lgamma(n + 1.5) - modstruve::lgamma(n + nu + 1.5));
}

double bessel_coeff_alpha(double nu, int n) {
  require_order(nu, -2.0, "bessel_coeff_alpha");
  if (n < 0) throw domain_error("bessel_coeff_alpha requires n >= 0");
  return std::exp(-modstruve::lgamma(n + 1.0) - modstruve::lgamma(n + nu + 2.0));
}

StruveSeries struve_series(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -2.5, "struve_series");
  detail::check_series_argument(x, "struve_series");
  budget.validate();

  const double half = 0.5 * x;
  const double log_half = std::log(half);
  const double a0 = nu + 1.5;

  double t0 = 0.0;
  if (a0 > 0.0) {
    t0 = std::exp((nu + 1.0) * log_half - kLgammaThreeHalves - modstruve::lgamma(a0));
  } else {
    t0 = std::pow(half, nu + 1.0) * recip_gamma(a0) * (2.0 / kSqrtPi);
  }
  const double log_t1 = (nu + 3.0) * log_half - kLgammaFiveHalves - modstruve::lgamma(nu + 2.5);
  const double t1 = std::exp(log_t1);
  const double h2 = half * half;
  auto ratio = [h2, nu](int n) { return h2 / ((n + 1.5) * (n + nu + 1.5)); };

  const auto s = detail::sum_power_series(t0, t1, nu + 1.0, ratio, std::fabs(log_t1), budget);
  StruveSeries out;
  out.value = make_eval(s.sum[0], s.err[0], s.terms);
  out.derivative = make_eval(s.sum[1] / x, s.err[1] / x, s.terms);
  out.second_derivative = make_eval(s.sum[2] / (x * x), s.err[2] / (x * x), s.terms);
  return out;
}

Evaluation struve_l(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "struve_l");
  return struve_series(nu, x, budget).value;
}

Evaluation struve_l_prime(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "struve_l_prime");
  return struve_series(nu, x, budget).derivative;
}

Evaluation struve_norm(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.5, "struve_norm");
  detail::check_series_argument(x, "struve_norm");
  budget.validate();

  const double half = 0.5 * x;
  const double t0 = 2.0 * half / kSqrtPi;
  const double log_t1 = 3.0 * std::log(half) - kLgammaFiveHalves - std::log(nu + 1.5);
  const double t1 = std::exp(log_t1);
  const double h2 = half * half;
  auto ratio = [h2, nu](int n) { return h2 / ((n + 1.5) * (n + nu + 1.5)); };
  const auto s = detail::sum_power_series(t0, t1, 1.0, ratio, std::fabs(log_t1), budget);
  return make_eval(s.sum[0], s.err[0], s.terms);
}

Evaluation bessel_i(double nu, double x, const AccuracySpec& budget) {
  require_order(nu, -1.0, "bessel_i");
  detail::check_series_argument(x, "bessel_i");
  budget.validate();

  const double half = 0.5 * x;
  const double log_half = std::log(half);
  const double t0 = std::exp(nu * log_half - modstruve::lgamma(nu + 1.0));
  const double log_t1 = (nu + 2.0) * log_half - modstruve::lgamma(nu + 2.0);
  const double t1 = std::exp(log_t1);
  const double h2 = half * half;
  auto ratio = [h2, nu](int n) { return h2 / ((n + 1.0) * (n + nu + 1.0)); };
  const auto s = detail::sum_power_series(t0, t1, nu, ratio, std::fabs(log_t1), budget);
  return make_eval(s.sum[0], s.err[0], s.terms);
}

}  // namespace modstruve
