#pragma once

// Shared summation loop for the Struve / Bessel power series. Internal header.

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/numerics.hpp"
#include "modstruve/struve.hpp"

namespace modstruve::detail {

/// Sums S_k = sum_n t_n W_k(n) for k = 0, 1, 2 where W_0 = 1, W_1 = e_n, W_2 = e_n (e_n - 1)
/// and e_n = 2n + exponent is the power of (x/2) carried by t_n.
struct SeriesSums {
  std::array<double, 3> sum{};
  std::array<double, 3> err{};
  int terms = 0;
};

/// t0 may be zero or negative (pole convention); t1 must be positive. ratio(n) returns
/// t_{n+1}/t_n for n >= 1 and must be positive and eventually decreasing.
template <class Ratio>
SeriesSums sum_power_series(double t0, double t1, double exponent, Ratio&& ratio,
                            double log_t1_magnitude, const AccuracySpec& budget) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto weights = [exponent](int n) {
    const double e = 2.0 * n + exponent;
    return std::array<double, 3>{1.0, e, e * (e - 1.0)};
  };

  std::array<CompensatedSum, 3> acc;
  auto add_term = [&](int n, double t) {
    const auto w = weights(n);
    for (int k = 0; k < 3; ++k) acc[k] += t * w[k];
  };

  add_term(0, t0);
  if (budget.max_terms < 2) throw convergence_error("series needs at least two terms");
  add_term(1, t1);

  double t = t1;
  for (int n = 1; n < budget.max_terms; ++n) {
    const double r = ratio(n);
    const double next = t * r;
    if (r < 1.0) {
      const double r_after = ratio(n + 1);
      const auto w_next = weights(n + 1);
      const auto w_after = weights(n + 2);
      bool done = true;
      std::array<double, 3> tail{};
      for (int k = 0; k < 3 && done; ++k) {
        const double head = std::fabs(next * w_next[k]);
        const double q = r_after * (k == 0 ? 1.0 : std::fabs(w_after[k] / w_next[k]));
        if (q >= 1.0 || head > budget.rel_tol * acc[k].abs_sum()) {
          done = false;
        } else {
          tail[k] = head / (1.0 - q);
        }
      }
      if (done) {
        SeriesSums out;
        out.terms = n + 1;
        const double term_rel_err = eps * (4.0 * out.terms + log_t1_magnitude + 2.0);
        for (int k = 0; k < 3; ++k) {
          out.sum[k] = acc[k].value();
          out.err[k] = tail[k] + term_rel_err * acc[k].abs_sum();
        }
        return out;
      }
    }
    add_term(n + 1, next);
    t = next;
  }
  throw convergence_error("power series did not converge within " +
                          std::to_string(budget.max_terms) + " terms");
}

inline void check_series_argument(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error(std::string(who) + " requires finite x > 0, got " + std::to_string(x));
  if (x > kSeriesMaxX)
    throw range_error(std::string(who) + ": series evaluation is limited to x <= 50, got " +
                      std::to_string(x));
}

}  // namespace modstruve::detail
