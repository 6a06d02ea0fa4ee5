#pragma once

#include <string>

#include "modstruve/numerics.hpp"

namespace modstruve {

/// Left side minus right side of one identity at one point.
struct ResidualReport {
  std::string identity_name;
  double nu = 0.0;
  double x = 0.0;
  double residual = 0.0;
  double scale = 1.0;
  double rel_residual = 0.0;
};

/// (x/2)^nu / (sqrt(pi) Gamma(nu+3/2)), the term that separates the Struve recurrences from
/// the Bessel ones. nu > -3/2.
double struve_inhomogeneity(double nu, double x);

/// L_{nu-1} - L_{nu+1} = (2 nu / x) L_nu + (x/2)^nu / (sqrt(pi) Gamma(nu+3/2)), nu > -1/2.
ResidualReport residual_subtraction_recurrence(double nu, double x, const AccuracySpec& budget = {});

/// x L'_nu + nu L_nu = x L_{nu-1}, nu > -1/2.
ResidualReport residual_derivative_recurrence(double nu, double x, const AccuracySpec& budget = {});

/// L_{nu+1} = L'_nu - (nu/x) L_nu - (x/2)^nu / (sqrt(pi) Gamma(nu+3/2)), nu > -3/2.
ResidualReport residual_shift_recurrence(double nu, double x, const AccuracySpec& budget = {});

/// L''_nu = (1 + nu^2/x^2) L_nu - L'_nu / x + x^{nu-1} / (sqrt(pi) 2^{nu-1} Gamma(nu+1/2)),
/// nu > -1/2, with L'' from the twice-differentiated series.
ResidualReport residual_ode(double nu, double x, const AccuracySpec& budget = {});

/// [x^-nu L_nu]' = 2^-nu / (sqrt(pi) Gamma(nu+3/2)) + x^-nu L_{nu+1}, nu > -3/2.
ResidualReport residual_xnu_derivative(double nu, double x, const AccuracySpec& budget = {});

/// Two expressions for L_nu^2 - L_{nu-1} L_{nu+1}; the residual is scaled by L_nu^2.
/// nu > -1/2.
ResidualReport turan_delta_identity(double nu, double x, const AccuracySpec& budget = {});

/// The Turan difference L_nu^2 - L_{nu-1} L_{nu+1} itself, nu > -3/2 (L_{nu-1} extended).
double turan_delta(double nu, double x, const AccuracySpec& budget = {});

/// (1/x) L^2 d/dx[x L'/L] by a centered difference with step h, against its closed
/// expression in L and L'. nu > -1/2.
ResidualReport logderiv_bridge(double nu, double x, double h = 1e-5, const AccuracySpec& budget = {});

}  // namespace modstruve
