#pragma once

#include <functional>
#include <string_view>

#include "modstruve/numerics.hpp"

namespace modstruve {

enum class Method { series, quadrature, closed_form };

std::string_view to_string(Method m);

/// A function value together with how it was obtained.
struct Evaluation {
  double value = 0.0;
  double abs_error_est = 0.0;
  int terms_used = 0;
  Method method = Method::series;
  /// Set when a quadrature finished its refinement levels without meeting its tolerance.
  bool accuracy_warning = false;
};

/// Tanh-sinh refinement budget. The integral is accepted once successive levels differ by
/// at most abs_tol * max(1, |integral|).
struct QuadratureSpec {
  int levels = 10;
  double abs_tol = 1e-12;

  void validate() const;
};

/// Largest argument accepted by the power-series evaluators.
inline constexpr double kSeriesMaxX = 50.0;

// Series coefficients -------------------------------------------------------

/// beta_{nu,n} = 1 / (Gamma(n+3/2) Gamma(n+nu+3/2)), nu > -3/2.
double struve_coeff_beta(double nu, int n);

/// alpha_{nu,n} = 1 / (n! Gamma(n+nu+2)), the I_{nu+1} coefficients; nu > -2.
double bessel_coeff_alpha(double nu, int n);

// Evaluators ----------------------------------------------------------------

/// L_nu, L'_nu and L''_nu from one pass over the termwise-differentiated series.
struct StruveSeries {
  Evaluation value;
  Evaluation derivative;
  Evaluation second_derivative;
};

/// Accepts nu > -5/2. Below -3/2 the n = 0 coefficient is taken as 1/Gamma(nu+3/2) with
/// the pole -> 0 convention, so the value may vanish or be negative there. x in (0, 50].
StruveSeries struve_series(double nu, double x, const AccuracySpec& budget = {});

/// Modified Struve function L_nu(x), nu > -3/2, x in (0, 50].
Evaluation struve_l(double nu, double x, const AccuracySpec& budget = {});

/// L'_nu(x), nu > -3/2.
Evaluation struve_l_prime(double nu, double x, const AccuracySpec& budget = {});

/// Normalized function 2^nu Gamma(nu+3/2) x^-nu L_nu(x), summed in its own series.
Evaluation struve_norm(double nu, double x, const AccuracySpec& budget = {});

/// Modified Bessel function I_nu(x), nu > -1, x in (0, 50].
Evaluation bessel_i(double nu, double x, const AccuracySpec& budget = {});

/// Elementary closed forms for nu in {-1/2, 1/2, 3/2} (exact match required).
Evaluation struve_closed_form(double nu, double x);

/// L_nu(x) by tanh-sinh quadrature of
///   2 (x/2)^nu / (sqrt(pi) Gamma(nu+1/2)) * int_0^{pi/2} sinh(x cos t) sin(t)^{2 nu} dt,
/// nu > -1/2.
Evaluation struve_l_quad(double nu, double x, const QuadratureSpec& q = {});

/// 2^nu Gamma(nu+3/2) x^-nu L_{nu+1}(x) by quadrature, nu > -3/2.
/// Uses the integrated-by-parts form
///   -1/sqrt(pi) + 2 (nu+1/2)/sqrt(pi) int_0^1 (1-s^2)^{nu-1/2} s cosh(x s) ds
/// while its endpoint singularity stays integrable in double precision (nu > -0.45), and
///   x/sqrt(pi) int_0^1 (1-s^2)^{nu+1/2} sinh(x s) ds
/// below that.
Evaluation struve_next_shifted(double nu, double x, const QuadratureSpec& q = {});

// Coefficient-quotient monotonicity -----------------------------------------

enum class Monotonicity { increasing, decreasing, constant, neither };

std::string_view to_string(Monotonicity m);

using CoefficientFn = std::function<double(int)>;

/// Classifies n -> numer(n)/denom(n) on n = 0..n_max. Consecutive quotients within 1e-14
/// relative are ties; an all-tie sequence is reported as constant.
Monotonicity quotient_sequence_monotone(const CoefficientFn& numer, const CoefficientFn& denom,
                                        int n_max);

// Elementary helpers --------------------------------------------------------

/// cosh x - 1 without cancellation.
double cosh_minus_one(double x);

/// 1 - cosh x + x sinh x - x^2/2, the numerator of L_{3/2}/L_{1/2}; series near 0.
double l32_numerator(double x);

}  // namespace modstruve
