#include "modstruve/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "modstruve/errors.hpp"
#include "modstruve/relations.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::increasing:
      return "increasing";
    case Direction::decreasing:
      return "decreasing";
    case Direction::log_convex:
      return "log-convex";
    case Direction::log_concave:
      return "log-concave";
    case Direction::value:
      return "value";
    case Direction::ordering:
      return "ordering";
  }
  return "unknown";
}

void PropertyResult::merge(const PropertyResult& other) {
  comparisons += other.comparisons;
  failures += other.failures;
  pass = pass && other.pass;
  if (other.worst.slack < worst.slack) worst = other.worst;
  if (error.empty() && !other.error.empty()) error = other.error;
}

namespace {

using Coords = std::vector<std::pair<std::string, double>>;

struct Judge {
  PropertyResult r;

  explicit Judge(Direction d) { r.direction = d; }

  // strict claims fail at slack <= 0, the others only below -tol
  void add(double slack, Coords coords, bool strict = false, double tol = kMonotoneTol) {
    ++r.comparisons;
    const bool ok = std::isfinite(slack) && (strict ? slack > 0.0 : slack >= -tol);
    if (!ok) {
      ++r.failures;
      r.pass = false;
    }
    if (!(slack >= r.worst.slack)) {  // also catches NaN
      r.worst.slack = slack;
      r.worst.coords = std::move(coords);
    }
  }
};

double log_norm_factor(double nu) { return nu * std::numbers::ln2 + lgamma(nu + 1.5); }

void monotone_pass(Judge& j, const std::vector<double>& f, std::span<const double> axis, Direction dir,
                   const char* axis_name, const Coords& fixed) {
  const double sign = dir == Direction::increasing ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double scale = std::max(std::fabs(f[i]), std::fabs(f[i + 1]));
    const double slack = sign * (f[i + 1] - f[i]) / (scale > 0.0 ? scale : 1.0);
    Coords c = fixed;
    c.emplace_back(axis_name, axis[i]);
    c.emplace_back(std::string(axis_name) + "2", axis[i + 1]);
    j.add(slack, std::move(c));
  }
}

// midpoint slack 1 - f_mid^2 / (f_1 f_2) from logarithms
double convex_slack(double log1, double log2, double log_mid) { return -std::expm1(2.0 * log_mid - log1 - log2); }

}  // namespace

PropertyResult check_monotone_x(MonotoneXTarget target, Direction dir, double nu, double mu,
                                std::span<const double> x_grid) {
  std::function<double(double)> f;
  Coords fixed{{"nu", nu}};
  switch (target) {
    case MonotoneXTarget::bessel_over_struve:
      f = [nu](double x) { return bessel_i(nu + 1.0, x).value / struve_l(nu, x).value; };
      break;
    case MonotoneXTarget::norm_ratio_two_orders:
      fixed.emplace_back("mu", mu);
      f = [nu, mu](double x) {
        return std::exp((nu - mu) * std::numbers::ln2 + (mu - nu) * std::log(x)) * struve_l(nu, x).value /
               struve_l(mu, x).value;
      };
      break;
    case MonotoneXTarget::log_deriv:
      f = [nu](double x) {
        const auto s = struve_series(nu, x);
        return x * s.derivative.value / s.value.value;
      };
      break;
    case MonotoneXTarget::closed_ratio_half:
      fixed.clear();
      f = [](double x) { return struve_l(0.5, x).value / struve_l(-0.5, x).value; };
      break;
  }
  std::vector<double> v;
  v.reserve(x_grid.size());
  for (double x : x_grid) v.push_back(f(x));
  Judge j(dir);
  monotone_pass(j, v, x_grid, dir, "x", fixed);
  return j.r;
}

PropertyResult check_monotone_nu(MonotoneNuTarget target, Direction dir, double x,
                                 std::span<const double> nu_grid) {
  std::vector<double> v;
  v.reserve(nu_grid.size());
  for (double nu : nu_grid) {
    switch (target) {
      case MonotoneNuTarget::norm_struve:
        v.push_back(struve_norm(nu, x).value);
        break;
      case MonotoneNuTarget::successive_ratio:
        v.push_back(struve_l(nu + 1.0, x).value / struve_l(nu, x).value);
        break;
      case MonotoneNuTarget::scaled_successive_ratio:
        v.push_back(2.0 * struve_l(nu + 1.0, x).value / (x * struve_l(nu, x).value));
        break;
    }
  }
  Judge j(dir);
  monotone_pass(j, v, nu_grid, dir, "nu", {{"x", x}});
  return j.r;
}

PropertyResult check_logconvex_nu(double x, std::span<const double> nu_grid, double max_distance) {
  auto lf = [x](double nu) { return std::log(struve_norm(nu, x).value); };
  std::vector<double> logs;
  for (double nu : nu_grid) logs.push_back(lf(nu));
  Judge j(Direction::log_convex);
  for (std::size_t a = 0; a < nu_grid.size(); ++a) {
    for (std::size_t b = a + 1; b < nu_grid.size(); ++b) {
      if (std::fabs(nu_grid[b] - nu_grid[a]) > max_distance) continue;
      const double mid = 0.5 * (nu_grid[a] + nu_grid[b]);
      j.add(convex_slack(logs[a], logs[b], lf(mid)), {{"x", x}, {"nu1", nu_grid[a]}, {"nu2", nu_grid[b]}});
    }
  }
  return j.r;
}

namespace {

PropertyResult midpoint_logconcave_nu(double x, std::span<const double> nu_grid, double max_distance) {
  auto lf = [x](double nu) { return std::log(struve_l(nu, x).value); };
  std::vector<double> logs;
  for (double nu : nu_grid) logs.push_back(lf(nu));
  Judge j(Direction::log_concave);
  for (std::size_t a = 0; a < nu_grid.size(); ++a) {
    for (std::size_t b = a + 1; b < nu_grid.size(); ++b) {
      if (std::fabs(nu_grid[b] - nu_grid[a]) > max_distance) continue;
      const double mid = 0.5 * (nu_grid[a] + nu_grid[b]);
      j.add(-convex_slack(logs[a], logs[b], lf(mid)), {{"x", x}, {"nu1", nu_grid[a]}, {"nu2", nu_grid[b]}},
            /*strict=*/true);
    }
  }
  return j.r;
}

// g(nu+1) g(nu+a) - g(nu) g(nu+a+1) >= 0 with g(nu) = (2/x)^{nu+1} L_nu(x)
PropertyResult wright_logconcave_nu(double x, std::span<const double> nu_grid) {
  auto lg = [x](double nu) { return (nu + 1.0) * std::log(2.0 / x) + std::log(struve_l(nu, x).value); };
  Judge j(Direction::log_concave);
  for (double nu : nu_grid) {
    for (double a : {0.5, 1.0, 2.0}) {
      const double good = lg(nu + 1.0) + lg(nu + a);
      const double other = lg(nu) + lg(nu + a + 1.0);
      j.add(-std::expm1(other - good), {{"x", x}, {"nu", nu}, {"a", a}});
    }
  }
  return j.r;
}

}  // namespace

PropertyResult check_logconcave_nu(double x, std::span<const double> nu_grid, double max_distance) {
  PropertyResult r = midpoint_logconcave_nu(x, nu_grid, max_distance);
  r.merge(wright_logconcave_nu(x, nu_grid));
  return r;
}

PropertyResult check_logconvex_x(double nu, std::span<const double> x_grid) {
  const double c = log_norm_factor(nu);
  auto lf = [nu, c](double x) {
    return std::log(1.0 / kSqrtPi + std::exp(c - nu * std::log(x)) * struve_l(nu + 1.0, x).value);
  };
  std::vector<double> logs;
  for (double x : x_grid) logs.push_back(lf(x));
  Judge j(Direction::log_convex);
  for (std::size_t a = 0; a < x_grid.size(); ++a)
    for (std::size_t b = a + 1; b < x_grid.size(); ++b)
      j.add(convex_slack(logs[a], logs[b], lf(0.5 * (x_grid[a] + x_grid[b]))),
            {{"nu", nu}, {"x1", x_grid[a]}, {"x2", x_grid[b]}});
  return j.r;
}

// Suite ------------------------------------------------------------------------

namespace {

using Runner = std::function<PropertyResult(const GridSpec&, ExecutionMode)>;

struct Entry {
  PropertyCheck check;
  Runner run;
};

template <class P, class F>
PropertyResult over(const std::vector<P>& params, ExecutionMode mode, F fn) {
  std::vector<PropertyResult> parts(params.size());
  const auto n = static_cast<long>(params.size());
  auto one = [&](long i) {
    try {
      parts[i] = fn(params[i]);
    } catch (const std::exception& e) {
      parts[i].pass = false;
      parts[i].error = e.what();
    }
  };
  if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  PropertyResult out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

bool near_boundary(double nu, double b) { return std::fabs(nu - b) < kBoundaryExclusion; }

// grid orders satisfying keep, plus the given closed endpoints, sorted
std::vector<double> orders(const GridSpec& g, const std::function<bool(double)>& keep,
                           std::vector<double> endpoints = {}) {
  std::vector<double> out;
  for (double nu : g.nu_values())
    if (keep(nu)) out.push_back(nu);
  for (double e : endpoints)
    if (e >= g.nu_min && e <= g.nu_max && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<double, double>> order_pairs(const GridSpec& g, bool mu_above) {
  const auto nu = g.nu_values();
  std::vector<std::pair<double, double>> out;
  const int n = static_cast<int>(nu.size());
  for (int i = 0; i < n; ++i)
    for (int k : {0, 1, 2, 4, 8, 16, 32}) {
      const int m = mu_above ? i + k : i - k;
      if (m >= 0 && m < n) out.emplace_back(nu[i], nu[m]);
    }
  return out;
}

PropertyResult scaled_monotone_x(const GridSpec& g, ExecutionMode mode, const std::vector<double>& nus,
                                 Direction dir, double (*denominator)(double)) {
  const auto xs = g.x_values();
  return over(nus, mode, [&](double nu) {
    std::vector<double> v;
    for (double x : xs) v.push_back(std::exp(nu * std::log(x)) * struve_l(nu, x).value / denominator(x));
    Judge j(dir);
    monotone_pass(j, v, xs, dir, "x", {{"nu", nu}});
    return j.r;
  });
}

double exp_weight(double x) { return std::exp(x); }

std::vector<Entry> build_suite() {
  const GridSpec g0;
  const double dx = (g0.x_max - g0.x_min) / (g0.x_steps - 1);
  const double dnu = (g0.nu_max - g0.nu_min) / (g0.nu_steps - 1);
  std::vector<Entry> s;

  auto add = [&](std::string name, std::string target, std::string citation, std::string domain, Direction d,
                 double step, Runner run) {
    s.push_back({PropertyCheck{std::move(name), std::move(target), std::move(citation), std::move(domain), d, step},
                 std::move(run)});
  };

  add("bessel_over_struve_increasing_x", "I_{nu+1}(x) / L_nu(x)",
      "x -> I_{nu+1}(x)/L_nu(x) is increasing on (0,inf) for nu >= -1/2", "nu >= -1/2", Direction::increasing, dx,
      [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(orders(g, [](double nu) { return nu > -0.5; }, {-0.5}), m, [&](double nu) {
          return check_monotone_x(MonotoneXTarget::bessel_over_struve, Direction::increasing, nu, 0.0, xs);
        });
      });
  add("bessel_over_struve_decreasing_x", "I_{nu+1}(x) / L_nu(x)",
      "x -> I_{nu+1}(x)/L_nu(x) is decreasing on (0,inf) for nu in (-3/2,-1/2]", "nu in (-3/2,-1/2]",
      Direction::decreasing, dx, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(orders(g, [](double nu) { return nu < -0.5 && nu > -1.5 + kBoundaryExclusion; }, {-0.5}), m,
                    [&](double nu) {
                      return check_monotone_x(MonotoneXTarget::bessel_over_struve, Direction::decreasing, nu, 0.0,
                                              xs);
                    });
      });
  add("norm_ratio_increasing_x", "2^{nu-mu} x^{mu-nu} L_nu(x) / L_mu(x)",
      "x -> 2^{nu-mu} x^{mu-nu} L_nu(x)/L_mu(x) is increasing on (0,inf) for mu >= nu > -3/2", "mu >= nu > -3/2",
      Direction::increasing, dx, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(order_pairs(g, true), m, [&](const std::pair<double, double>& p) {
          return check_monotone_x(MonotoneXTarget::norm_ratio_two_orders, Direction::increasing, p.first,
                                  p.second, xs);
        });
      });
  add("norm_ratio_decreasing_x", "2^{nu-mu} x^{mu-nu} L_nu(x) / L_mu(x)",
      "x -> 2^{nu-mu} x^{mu-nu} L_nu(x)/L_mu(x) is decreasing on (0,inf) for nu >= mu > -3/2", "nu >= mu > -3/2",
      Direction::decreasing, dx, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(order_pairs(g, false), m, [&](const std::pair<double, double>& p) {
          return check_monotone_x(MonotoneXTarget::norm_ratio_two_orders, Direction::decreasing, p.first,
                                  p.second, xs);
        });
      });
  add("norm_struve_decreasing_nu", "2^nu Gamma(nu+3/2) x^-nu L_nu(x)",
      "nu -> 2^nu Gamma(nu+3/2) x^-nu L_nu(x) is decreasing on (-3/2,inf) for all x > 0", "nu > -3/2",
      Direction::decreasing, dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) {
          return check_monotone_nu(MonotoneNuTarget::norm_struve, Direction::decreasing, x, nus);
        });
      });
  add("norm_struve_logconvex_nu", "2^nu Gamma(nu+3/2) x^-nu L_nu(x)",
      "nu -> 2^nu Gamma(nu+3/2) x^-nu L_nu(x) is log-convex on (-3/2,inf) for all x > 0",
      "nu > -3/2, pairs with |nu1 - nu2| <= 4", Direction::log_convex, dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) { return check_logconvex_nu(x, nus); });
      });
  add("successive_ratio_decreasing_nu", "L_{nu+1}(x) / L_nu(x)",
      "nu -> L_{nu+1}(x)/L_nu(x) is decreasing on (-3/2,inf) for all x > 0", "nu > -3/2", Direction::decreasing,
      dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) {
          return check_monotone_nu(MonotoneNuTarget::successive_ratio, Direction::decreasing, x, nus);
        });
      });
  add("xlogderiv_increasing_x", "x L'_nu(x) / L_nu(x)",
      "x -> x L'_nu(x)/L_nu(x) is increasing on (0,inf) for all nu > -3/2", "nu > -3/2", Direction::increasing, dx,
      [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(g.nu_values(), m, [&](double nu) {
          return check_monotone_x(MonotoneXTarget::log_deriv, Direction::increasing, nu, 0.0, xs);
        });
      });
  add("shifted_norm_logconvex_x", "1/sqrt(pi) + 2^nu Gamma(nu+3/2) x^-nu L_{nu+1}(x)",
      "x -> 1/sqrt(pi) + 2^nu Gamma(nu+3/2) x^-nu L_{nu+1}(x) is log-convex on (0,inf) for nu >= -1/2",
      "nu >= -1/2, all x pairs", Direction::log_convex, dx, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(orders(g, [](double nu) { return nu > -0.5; }, {-0.5}), m,
                    [&](double nu) { return check_logconvex_x(nu, xs); });
      });
  add("struve_logconcave_nu", "L_nu(x)",
      "nu -> L_nu(x) is strictly log-concave on (-3/2,inf) for all x > 0",
      "nu > -3/2, pairs with |nu1 - nu2| <= 4", Direction::log_concave, dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) { return midpoint_logconcave_nu(x, nus, 4.0); });
      });
  add("wright_logconcave_nu", "2^{nu+1} x^{-nu-1} L_nu(x)",
      "g(nu+1) g(nu+a) - g(nu) g(nu+a+1) >= 0 for g(nu) = 2^{nu+1} x^{-nu-1} L_nu(x), a > 0",
      "nu > -3/2, a in {1/2, 1, 2}", Direction::log_concave, dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) { return wright_logconcave_nu(x, nus); });
      });
  add("scaled_successive_ratio_decreasing_nu", "2 L_{nu+1}(x) / (x L_nu(x))",
      "nu -> 2 L_{nu+1}(x) / (x L_nu(x)) is strictly decreasing on (-3/2,inf) for all x > 0", "nu > -3/2",
      Direction::decreasing, dnu, [](const GridSpec& g, ExecutionMode m) {
        const auto nus = g.nu_values();
        return over(g.x_values(), m, [&](double x) {
          return check_monotone_nu(MonotoneNuTarget::scaled_successive_ratio, Direction::decreasing, x, nus);
        });
      });
  add("closed_ratio_half_increasing_x", "L_{1/2}(x) / L_{-1/2}(x)",
      "[L_{1/2}(x)/L_{-1/2}(x)]' = (cosh x - 1)/sinh^2 x > 0", "x > 0", Direction::increasing, dx,
      [](const GridSpec& g, ExecutionMode) {
        return check_monotone_x(MonotoneXTarget::closed_ratio_half, Direction::increasing, 0.0, 0.0, g.x_values());
      });
  add("exp_scaled_increasing_x", "x^nu e^-x L_nu(x)", "x -> x^nu e^-x L_nu(x) is increasing on (0,inf) for nu >= 1/2",
      "nu >= 1/2", Direction::increasing, dx, [](const GridSpec& g, ExecutionMode m) {
        return scaled_monotone_x(g, m, orders(g, [](double nu) { return nu > 0.5; }, {0.5}), Direction::increasing,
                                 exp_weight);
      });
  add("cosh_scaled_increasing_x", "x^nu (cosh x - 1)^-1 L_nu(x)",
      "x -> x^nu (cosh x - 1)^-1 L_nu(x) is increasing on (0,inf) for nu >= 1/2", "nu >= 1/2", Direction::increasing,
      dx, [](const GridSpec& g, ExecutionMode m) {
        return scaled_monotone_x(g, m, orders(g, [](double nu) { return nu > 0.5; }, {0.5}), Direction::increasing,
                                 cosh_minus_one);
      });
  add("cosh_scaled_decreasing_x", "x^nu (cosh x - 1)^-1 L_nu(x)",
      "x -> x^nu (cosh x - 1)^-1 L_nu(x) is decreasing on (0,inf) for |nu| < 1/2", "|nu| < 1/2",
      Direction::decreasing, dx, [](const GridSpec& g, ExecutionMode m) {
        auto keep = [](double nu) {
          return std::fabs(nu) < 0.5 && !near_boundary(nu, 0.5) && !near_boundary(nu, -0.5);
        };
        return scaled_monotone_x(g, m, orders(g, keep), Direction::decreasing, cosh_minus_one);
      });
  add("l32_scaled_increasing_x", "x^nu (1 - cosh x + x sinh x - x^2/2)^-1 L_nu(x)",
      "x -> x^nu (1 - cosh x + x sinh x - x^2/2)^-1 L_nu(x) is increasing on (0,inf) for nu >= 3/2", "nu >= 3/2",
      Direction::increasing, dx, [](const GridSpec& g, ExecutionMode m) {
        return scaled_monotone_x(g, m, orders(g, [](double nu) { return nu > 1.5; }, {1.5}), Direction::increasing,
                                 l32_numerator);
      });
  add("l32_scaled_decreasing_x", "x^nu (1 - cosh x + x sinh x - x^2/2)^-1 L_nu(x)",
      "x -> x^nu (1 - cosh x + x sinh x - x^2/2)^-1 L_nu(x) is decreasing on (0,inf) for nu in (-1/2,3/2)",
      "nu in (-1/2,3/2)", Direction::decreasing, dx, [](const GridSpec& g, ExecutionMode m) {
        auto keep = [](double nu) {
          return nu > -0.5 && nu < 1.5 && !near_boundary(nu, -0.5) && !near_boundary(nu, 1.5);
        };
        return scaled_monotone_x(g, m, orders(g, keep), Direction::decreasing, l32_numerator);
      });
  add("sinh_quotient_increasing_x", "2^nu Gamma(nu+3/2) x^-nu L_nu(x) / sinh(x/(2nu+3))",
      "x -> 2^nu Gamma(nu+3/2) x^-nu L_nu(x) / sinh(x/(2nu+3)) is increasing on (0,inf) for nu > -1", "nu > -1",
      Direction::increasing, dx, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        auto keep = [](double nu) { return nu > -1.0 && !near_boundary(nu, -1.0); };
        return over(orders(g, keep), m, [&](double nu) {
          std::vector<double> v;
          for (double x : xs) v.push_back(struve_norm(nu, x).value / std::sinh(x / (2.0 * nu + 3.0)));
          Judge j(Direction::increasing);
          monotone_pass(j, v, xs, Direction::increasing, "x", {{"nu", nu}});
          return j.r;
        });
      });
  add("small_x_ratio_limit", "I_{3/2}(x) / L_{1/2}(x) at x = 1e-4",
      "I_{nu+1}(x)/L_nu(x) -> sqrt(pi) Gamma(nu+3/2) / (2 Gamma(nu+2)) = 2/3 at nu = 1/2", "x = 1e-4, tolerance 1e-6",
      Direction::value, 0.0, [](const GridSpec&, ExecutionMode) {
        const double x = 1e-4;
        const double err = std::fabs(bessel_i(1.5, x).value / struve_l(0.5, x).value - 2.0 / 3.0);
        Judge j(Direction::value);
        j.add((1e-6 - err) / 1e-6, {{"nu", 0.5}, {"x", x}}, false, 0.0);
        return j.r;
      });
  add("half_order_ratio_unity", "I_{1/2}(x) / L_{-1/2}(x)", "I_{1/2}(x) = L_{-1/2}(x) for all x > 0",
      "x grid, tolerance 1e-12", Direction::value, 0.0, [](const GridSpec& g, ExecutionMode) {
        Judge j(Direction::value);
        for (double x : g.x_values()) {
          const double err = std::fabs(bessel_i(0.5, x).value / struve_l(-0.5, x).value - 1.0);
          j.add((1e-12 - err) / 1e-12, {{"nu", -0.5}, {"x", x}}, false, 0.0);
        }
        return j.r;
      });
  add("turan_chain", "sharpened lower, Delta_nu, upper",
      "pi/4 (x/2)^{2nu+2} / ((nu+3/2) Gamma(nu+3/2)^2) < Delta_nu(x) < L_nu(x)^2/(nu+3/2)", "nu > -3/2",
      Direction::ordering, 0.0, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(g.nu_values(), m, [&](double nu) {
          Judge j(Direction::ordering);
          for (double x : xs) {
            const auto t = case_turan(nu, x);
            const double delta = t.left.rhs;
            const double slack = std::min((delta - t.sharpened_lower.lhs) / delta, (t.right.rhs - delta) / t.right.rhs);
            j.add(slack, {{"nu", nu}, {"x", x}}, /*strict=*/true);
          }
          return j.r;
        });
      });
  add("twopoint_chain", "cosh and exp two-point bounds",
      "(cosh x - 1)/(cosh y - 1) (y/x)^nu <= e^{x-y} (y/x)^nu for 0 < x < y", "nu >= 1/2, 0 < x < y",
      Direction::ordering, 0.0, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(orders(g, [](double nu) { return nu > 0.5; }, {0.5}), m, [&](double nu) {
          Judge j(Direction::ordering);
          for (std::size_t a = 0; a < xs.size(); ++a) {
            for (int k : {1, 2, 4, 8, 16, 32}) {
              if (a + k >= xs.size()) break;
              const double y = xs[a + k];
              const double e = case_two_point_ratio_family(TwoPointVariant::exp, nu, xs[a], y).rhs;
              const double c = case_two_point_ratio_family(TwoPointVariant::cosh, nu, xs[a], y).rhs;
              j.add((e - c) / e, {{"nu", nu}, {"x", xs[a]}, {"y", y}}, false, 0.0);
            }
          }
          return j.r;
        });
      });
  add("logderiv_chain", "linear, cosh and x2 log-derivative lower bounds",
      "1 - nu/t <= sinh t/(cosh t - 1) - nu/t (nu >= 1/2) <= (t cosh t - t)/(1 - cosh t + t sinh t - t^2/2) - nu/t "
      "(nu >= 3/2)",
      "nu >= 1/2", Direction::ordering, 0.0, [](const GridSpec& g, ExecutionMode m) {
        const auto xs = g.x_values();
        return over(orders(g, [](double nu) { return nu > 0.5; }, {0.5, 1.5}), m, [&](double nu) {
          Judge j(Direction::ordering);
          for (double x : xs) {
            const double lin = case_logderiv_lower_family(LogDerivVariant::linear, nu, x).lhs;
            const double ch = case_logderiv_lower_family(LogDerivVariant::cosh, nu, x).lhs;
            double slack = (ch - lin) / std::max(std::fabs(ch), std::fabs(lin));
            if (nu >= 1.5) {
              const double x2 = case_logderiv_lower_family(LogDerivVariant::x2, nu, x).lhs;
              slack = std::min(slack, (x2 - ch) / std::max(std::fabs(x2), std::fabs(ch)));
            }
            j.add(slack, {{"nu", nu}, {"x", x}}, false, 0.0);
          }
          return j.r;
        });
      });
  return s;
}

const std::vector<Entry>& suite() {
  static const std::vector<Entry> s = build_suite();
  return s;
}

}  // namespace

const std::vector<PropertyCheck>& property_catalogue() {
  static const std::vector<PropertyCheck> c = [] {
    std::vector<PropertyCheck> out;
    for (const auto& e : suite()) out.push_back(e.check);
    return out;
  }();
  return c;
}

const PropertyCheck& find_property(std::string_view name) {
  for (const auto& c : property_catalogue())
    if (c.name == name) return c;
  throw config_error("unknown property '" + std::string(name) + "'");
}

PropertyResult run_property(const PropertyCheck& check, const GridSpec& grid, ExecutionMode mode) {
  for (const auto& e : suite()) {
    if (e.check.name != check.name) continue;
    PropertyResult r;
    try {
      r = e.run(grid, mode);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.error = ex.what();
    }
    r.name = check.name;
    r.direction = check.direction;
    if (!r.error.empty()) r.pass = false;
    return r;
  }
  throw config_error("unknown property '" + check.name + "'");
}

}  // namespace modstruve
