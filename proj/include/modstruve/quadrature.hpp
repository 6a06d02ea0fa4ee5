#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modstruve/struve.hpp"

namespace modstruve {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels_used = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Tanh-sinh (double exponential) rule on [a, b].
///
/// The integrand is called as f(t, t - a, b - t) where the two distances are computed from
/// the transformation itself, so they keep full relative precision next to the endpoints.
/// Integrands with algebraic endpoint singularities should use them instead of t.
///
/// Level 0 uses step h = 1 on u in [-6, 6]; each further level halves h and adds the odd
/// nodes. The error estimate is the difference between the last two levels.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kUMax = 6.0;
  const double half = 0.5 * (b - a);
  const double width = b - a;

  QuadratureResult out;
  // one node pair at +-u, or the centre when u == 0
  auto node_sum = [&](double u) {
    const double v = kHalfPi * std::sinh(u);
    const double cv = std::cosh(v);
    const double w = kHalfPi * std::cosh(u) / (cv * cv);
    if (u == 0.0) {
      ++out.evaluations;
      return w * f(a + half, half, half);
    }
    const double dist = half * (2.0 / (std::exp(2.0 * v) + 1.0));  // half * (1 - tanh v)
    if (!(dist > 0.0) || !(w > 0.0)) return 0.0;
    out.evaluations += 2;
    return w * (f(a + dist, dist, width - dist) + f(b - dist, width - dist, dist));
  };

  double total = node_sum(0.0);
  for (double u = 1.0; u <= kUMax; u += 1.0) total += node_sum(u);
  double h = 1.0;
  double estimate = half * h * total;
  out.value = estimate;

  for (int level = 1; level <= spec.levels; ++level) {
    h *= 0.5;
    const int count = static_cast<int>(kUMax / h);
    for (int k = 1; k <= count; k += 2) total += node_sum(k * h);
    const double next = half * h * total;
    out.error_estimate = std::fabs(next - estimate);
    out.value = next;
    out.levels_used = level;
    estimate = next;
    const double tol = spec.abs_tol * std::max(1.0, std::fabs(next));
    if (level >= 3 && out.error_estimate <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace modstruve
