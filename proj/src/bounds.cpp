#include "modstruve/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "modstruve/errors.hpp"
#include "modstruve/relations.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

namespace {

double L(double nu, double x) { return struve_l(nu, x).value; }

// L_{nu-1} for nu > -3/2, through the extended series
double L_below(double nu, double x) { return struve_series(nu - 1.0, x).value.value; }

double log_deriv(double nu, double x) {
  const auto s = struve_series(nu, x);
  return s.derivative.value / s.value.value;
}

// 2^nu Gamma(nu+3/2) in the log domain
double log_norm_factor(double nu) { return nu * std::numbers::ln2 + lgamma(nu + 1.5); }

double y_of(const CasePoint& p) {
  if (!p.y) throw domain_error("case needs a second point y");
  if (!(*p.y > p.x)) throw domain_error("case needs x < y");
  return *p.y;
}

double mu_of(const CasePoint& p) {
  if (!p.mu) throw domain_error("case needs a second order mu");
  return *p.mu;
}

Applicability open_from(double lo) { return Applicability{Interval{lo, kInf}, false, false, std::nullopt, {}}; }

Applicability with_reversal(double lo, Interval reversal, double equality) {
  return Applicability{Interval{lo, kInf}, false, false, reversal, {equality}};
}

Applicability two_point(Applicability a) {
  a.needs_second_point = true;
  return a;
}

InequalityCase make(std::string name, std::string citation, Applicability a, Relation r,
                    std::function<Sides(const CasePoint&)> sides) {
  InequalityCase c;
  c.name = std::move(name);
  c.citation = std::move(citation);
  c.applicability = std::move(a);
  c.relation = r;
  c.sides = std::move(sides);
  return c;
}

std::vector<InequalityCase> build_registry() {
  constexpr Relation lt = Relation::strict_less;
  constexpr Relation le = Relation::less_or_equal;
  const Interval below_half{-1.5, -0.5};
  std::vector<InequalityCase> r;

  r.push_back(make("bessel_upper",
                   "L_nu(x) < 2 Gamma(nu+2) / (sqrt(pi) Gamma(nu+3/2)) I_{nu+1}(x); "
                   "reversed for nu in (-3/2,-1/2), equality at nu = -1/2",
                   with_reversal(-0.5, below_half, -0.5), lt, [](const CasePoint& p) {
                     const double c = 2.0 * std::exp(lgamma(p.nu + 2.0) - lgamma(p.nu + 1.5)) / kSqrtPi;
                     return Sides{L(p.nu, p.x), c * bessel_i(p.nu + 1.0, p.x).value};
                   }));

  {
    auto c = make("norm_monotone_nu",
                  "2^mu Gamma(mu+3/2) x^-mu L_mu(x) < 2^nu Gamma(nu+3/2) x^-nu L_nu(x) for mu > nu > -3/2; "
                  "reversed for nu > mu, equality at mu = nu",
                  open_from(-1.5), lt, [](const CasePoint& p) {
                    return Sides{struve_norm(mu_of(p), p.x).value, struve_norm(p.nu, p.x).value};
                  });
    c.applicability.needs_second_order = true;
    c.direction = [](const CasePoint& p) {
      const double mu = mu_of(p);
      if (!(p.nu > -1.5 + kBoundaryExclusion) || !(mu > -1.5 + kBoundaryExclusion)) return Expectation::outside;
      if (mu == p.nu) return Expectation::equality;
      if (std::fabs(mu - p.nu) < kBoundaryExclusion) return Expectation::outside;
      return mu > p.nu ? Expectation::holds : Expectation::reversed;
    };
    r.push_back(std::move(c));
  }

  r.push_back(make("turan_left", "0 < L_nu(x)^2 - L_{nu-1}(x) L_{nu+1}(x) for nu > -3/2", open_from(-1.5), lt,
                   [](const CasePoint& p) {
                     const double d = turan_delta(p.nu, p.x);
                     return Sides{0.0, d};
                   }));
  r.push_back(make("turan_right", "L_nu(x)^2 - L_{nu-1}(x) L_{nu+1}(x) < L_nu(x)^2 / (nu+3/2) for nu > -3/2",
                   open_from(-1.5), lt, [](const CasePoint& p) {
                     const double l = L(p.nu, p.x);
                     return Sides{turan_delta(p.nu, p.x), l * l / (p.nu + 1.5)};
                   }));
  r.push_back(make("turan_sharpened_lower",
                   "pi/4 (x/2)^{2nu+2} / ((nu+3/2) Gamma(nu+3/2)^2) < L_nu(x)^2 - L_{nu-1}(x) L_{nu+1}(x) "
                   "for nu > -3/2",
                   open_from(-1.5), lt, [](const CasePoint& p) {
                     const double lower = 0.25 * std::numbers::pi *
                                          std::exp((2.0 * p.nu + 2.0) * std::log(0.5 * p.x) -
                                                   2.0 * lgamma(p.nu + 1.5)) /
                                          (p.nu + 1.5);
                     return Sides{lower, turan_delta(p.nu, p.x)};
                   }));

  r.push_back(make("ratio_cosh",
                   "L_{nu+1}(x) / L_nu(x) < (cosh x - 1) / sinh x; reversed for nu in (-3/2,-1/2), "
                   "equality at nu = -1/2",
                   with_reversal(-0.5, below_half, -0.5), lt, [](const CasePoint& p) {
                     return Sides{L(p.nu + 1.0, p.x) / L(p.nu, p.x), std::tanh(0.5 * p.x)};
                   }));
  r.push_back(make("ratio_cosh_unit", "(cosh x - 1) / sinh x < 1", open_from(-1.5), lt, [](const CasePoint& p) {
    return Sides{std::tanh(0.5 * p.x), 1.0, 2.0 / (std::exp(p.x) + 1.0)};
  }));

  r.push_back(make("log_deriv_positive",
                   "0 < (1 + nu^2/x^2) L_nu(x)^2 - L'_nu(x)^2 + (nu+1/2) x^{nu-1} L_nu(x) / "
                   "(sqrt(pi) 2^{nu-1} Gamma(nu+3/2)) for nu > -3/2",
                   open_from(-1.5), lt, [](const CasePoint& p) {
                     const auto s = struve_series(p.nu, p.x);
                     const double l = s.value.value;
                     const double dl = s.derivative.value;
                     const double coupling = (p.nu + 0.5) *
                                             std::exp((p.nu - 1.0) * std::log(p.x) -
                                                      (p.nu - 1.0) * std::numbers::ln2 - lgamma(p.nu + 1.5) -
                                                      kLnSqrtPi) *
                                             l;
                     return Sides{0.0, (1.0 + p.nu * p.nu / (p.x * p.x)) * l * l - dl * dl + coupling};
                   }));

  r.push_back(make("ratio_l32",
                   "L_{nu+1}(x) / L_nu(x) < (1 - cosh x + x sinh x - x^2/2) / (x cosh x - x) for nu > 1/2; "
                   "reversed for nu in (-3/2,1/2), equality at nu = 1/2",
                   with_reversal(0.5, Interval{-1.5, 0.5}, 0.5), lt, [](const CasePoint& p) {
                     return Sides{L(p.nu + 1.0, p.x) / L(p.nu, p.x),
                                  l32_numerator(p.x) / (p.x * cosh_minus_one(p.x))};
                   }));

  r.push_back(make("logderiv_linear", "1 - nu/t < L'_nu(t) / L_nu(t) for nu >= 1/2", open_from(0.5), lt,
                   [](const CasePoint& p) { return Sides{1.0 - p.nu / p.x, log_deriv(p.nu, p.x)}; }));
  r.push_back(make("logderiv_cosh",
                   "sinh t / (cosh t - 1) - nu/t <= L'_nu(t) / L_nu(t) for nu >= 1/2; "
                   "reversed for |nu| < 1/2",
                   with_reversal(0.5, Interval{-0.5, 0.5}, 0.5), le, [](const CasePoint& p) {
                     return Sides{std::sinh(p.x) / cosh_minus_one(p.x) - p.nu / p.x, log_deriv(p.nu, p.x)};
                   }));
  r.push_back(make("logderiv_x2",
                   "(t cosh t - t) / (1 - cosh t + t sinh t - t^2/2) - nu/t <= L'_nu(t) / L_nu(t) for nu >= 3/2; "
                   "reversed for nu in (-1/2,3/2)",
                   with_reversal(1.5, Interval{-0.5, 1.5}, 1.5), le, [](const CasePoint& p) {
                     return Sides{p.x * cosh_minus_one(p.x) / l32_numerator(p.x) - p.nu / p.x,
                                  log_deriv(p.nu, p.x)};
                   }));

  r.push_back(make("twopoint_exp", "L_nu(x) / L_nu(y) < e^{x-y} (y/x)^nu for nu >= 1/2, 0 < x < y",
                   two_point(open_from(0.5)), lt, [](const CasePoint& p) {
                     const double y = y_of(p);
                     return Sides{L(p.nu, p.x) / L(p.nu, y), std::exp(p.x - y + p.nu * std::log(y / p.x))};
                   }));
  r.push_back(make("twopoint_cosh",
                   "L_nu(x) / L_nu(y) <= (cosh x - 1) / (cosh y - 1) (y/x)^nu for nu >= 1/2, 0 < x < y; "
                   "reversed for |nu| < 1/2",
                   two_point(with_reversal(0.5, Interval{-0.5, 0.5}, 0.5)), le, [](const CasePoint& p) {
                     const double y = y_of(p);
                     return Sides{L(p.nu, p.x) / L(p.nu, y),
                                  cosh_minus_one(p.x) / cosh_minus_one(y) * std::exp(p.nu * std::log(y / p.x))};
                   }));
  r.push_back(make("twopoint_x2",
                   "L_nu(x) / L_nu(y) <= (1 - cosh x + x sinh x - x^2/2) / (1 - cosh y + y sinh y - y^2/2) "
                   "(y/x)^nu for nu >= 3/2, 0 < x < y; reversed for nu in (-1/2,3/2)",
                   two_point(with_reversal(1.5, Interval{-0.5, 1.5}, 1.5)), le, [](const CasePoint& p) {
                     const double y = y_of(p);
                     return Sides{L(p.nu, p.x) / L(p.nu, y),
                                  l32_numerator(p.x) / l32_numerator(y) * std::exp(p.nu * std::log(y / p.x))};
                   }));
  r.push_back(make("twopoint_power", "L_nu(x) / L_nu(y) < (x/y)^{nu+1} for nu > -3/2, 0 < x < y",
                   two_point(open_from(-1.5)), lt, [](const CasePoint& p) {
                     const double y = y_of(p);
                     return Sides{L(p.nu, p.x) / L(p.nu, y), std::exp((p.nu + 1.0) * std::log(p.x / y))};
                   }));

  r.push_back(make("lowratio", "(2nu+1)/x < L_{nu-1}(x) / L_nu(x) for nu > -3/2", open_from(-1.5), lt,
                   [](const CasePoint& p) {
                     return Sides{(2.0 * p.nu + 1.0) / p.x, L_below(p.nu, p.x) / L(p.nu, p.x)};
                   }));
  r.push_back(make("xlogderiv_lower", "nu + 1 < x L'_nu(x) / L_nu(x) for nu > -3/2", open_from(-1.5), lt,
                   [](const CasePoint& p) { return Sides{p.nu + 1.0, p.x * log_deriv(p.nu, p.x)}; }));

  r.push_back(make("l0_bound",
                   "L_nu(x) <= x^nu L_0(x) / (2^nu Gamma(nu+1)) for nu >= 0; reversed for nu in (-1,0)",
                   with_reversal(0.0, Interval{-1.0, 0.0}, 0.0), le, [](const CasePoint& p) {
                     const double c = std::exp(p.nu * std::log(0.5 * p.x) - lgamma(p.nu + 1.0));
                     return Sides{L(p.nu, p.x), c * L(0.0, p.x)};
                   }));

  r.push_back(make("bessel_exp",
                   "L_nu(x) < x^{nu+1} e^{x^2/(4(nu+2))} / (sqrt(pi) 2^nu Gamma(nu+3/2)) for nu > -1/2",
                   open_from(-0.5), lt, [](const CasePoint& p) {
                     const double log_rhs = (p.nu + 1.0) * std::log(p.x) + p.x * p.x / (4.0 * (p.nu + 2.0)) -
                                            kLnSqrtPi - log_norm_factor(p.nu);
                     return Sides{L(p.nu, p.x), std::exp(log_rhs)};
                   }));
  r.push_back(make("l0_exp", "L_nu(x) < x^{nu+1} e^{x^2/8} / (pi 2^{nu-1} Gamma(nu+1)) for nu >= 0",
                   open_from(0.0), lt, [](const CasePoint& p) {
                     const double log_rhs = (p.nu + 1.0) * std::log(p.x) + p.x * p.x / 8.0 -
                                            std::log(std::numbers::pi) - (p.nu - 1.0) * std::numbers::ln2 -
                                            lgamma(p.nu + 1.0);
                     return Sides{L(p.nu, p.x), std::exp(log_rhs)};
                   }));
  r.push_back(make("sinh_upper",
                   "L_nu(x) < x^nu sinh x / (sqrt(pi) 2^nu Gamma(nu+3/2)) for nu > -1/2; "
                   "reversed for nu in (-3/2,-1/2), equality at nu = -1/2",
                   with_reversal(-0.5, below_half, -0.5), lt, [](const CasePoint& p) {
                     const double c = std::exp(p.nu * std::log(p.x) - kLnSqrtPi - log_norm_factor(p.nu));
                     return Sides{L(p.nu, p.x), c * std::sinh(p.x)};
                   }));
  // The factor (2nu+3) is the x -> 0 limit of L_nu(x) / sinh(x/(2nu+3)) after normalization;
  // the printed constant 2 undershoots that limit for nu < -1/2.
  r.push_back(make("sinh_lower",
                   "(2nu+3) x^nu sinh(x/(2nu+3)) / (sqrt(pi) 2^nu Gamma(nu+3/2)) < L_nu(x) for nu > -1",
                   open_from(-1.0), lt, [](const CasePoint& p) {
                     const double k = 2.0 * p.nu + 3.0;
                     const double c = std::exp(p.nu * std::log(p.x) - kLnSqrtPi - log_norm_factor(p.nu));
                     return Sides{k * c * std::sinh(p.x / k), L(p.nu, p.x)};
                   }));
  return r;
}

bool near(double v, double b) { return std::isfinite(b) && std::fabs(v - b) < kBoundaryExclusion; }

auto point_key(const CasePoint& p) {
  return std::make_tuple(p.nu, p.mu.value_or(-kInf), p.x, p.y.value_or(-kInf));
}

}  // namespace

std::string_view to_string(Relation r) {
  return r == Relation::strict_less ? "strict_less" : "less_or_equal";
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::holds:
      return "holds";
    case Expectation::reversed:
      return "reversed";
    case Expectation::equality:
      return "equality";
    case Expectation::outside:
      return "outside";
  }
  return "unknown";
}

const std::vector<InequalityCase>& registry() {
  static const std::vector<InequalityCase> cases = build_registry();
  return cases;
}

const InequalityCase& find_case(std::string_view name) {
  for (const auto& c : registry())
    if (c.name == name) return c;
  throw config_error("unknown case '" + std::string(name) + "'");
}

Expectation expected_direction(const InequalityCase& c, const CasePoint& p) {
  if (c.direction) return c.direction(p);
  const auto& a = c.applicability;
  for (double e : a.equality_points)
    if (p.nu == e) return Expectation::equality;
  for (double e : a.equality_points)
    if (near(p.nu, e)) return Expectation::outside;
  if (near(p.nu, a.nu_range.lo) || near(p.nu, a.nu_range.hi)) return Expectation::outside;
  if (a.reversal_nu_range && (near(p.nu, a.reversal_nu_range->lo) || near(p.nu, a.reversal_nu_range->hi)))
    return Expectation::outside;
  if (a.nu_range.contains(p.nu)) return Expectation::holds;
  if (a.reversal_nu_range && a.reversal_nu_range->contains(p.nu)) return Expectation::reversed;
  return Expectation::outside;
}

InequalityRecord evaluate_case(const InequalityCase& c, const CasePoint& p) {
  InequalityRecord rec;
  rec.case_name = c.name;
  rec.point = p;
  rec.expectation = expected_direction(c, p);
  const Sides s = c.sides(p);
  rec.lhs = s.lhs;
  rec.rhs = s.rhs;
  rec.margin = std::isnan(s.margin) ? s.rhs - s.lhs : s.margin;

  const bool strict = c.relation == Relation::strict_less;
  switch (rec.expectation) {
    case Expectation::holds:
    case Expectation::outside:  // judged as stated
      rec.satisfied = strict ? rec.margin > 0.0 : rec.margin >= 0.0;
      break;
    case Expectation::reversed:
      rec.satisfied = strict ? rec.margin < 0.0 : rec.margin <= 0.0;
      break;
    case Expectation::equality:
      rec.satisfied = std::fabs(rec.margin) <= kEqualityTol * std::max(std::fabs(rec.lhs), std::fabs(rec.rhs));
      break;
  }
  return rec;
}

InequalityCase inverted(const InequalityCase& c) {
  InequalityCase out = c;
  out.sides = [inner = c.sides](const CasePoint& p) {
    const Sides s = inner(p);
    return Sides{s.rhs, s.lhs, std::isnan(s.margin) ? s.margin : -s.margin};
  };
  return out;
}

std::vector<CasePoint> sweep_points(const InequalityCase& c, const SweepAxes& axes) {
  std::vector<CasePoint> pts;
  if (axes.nu.empty() || axes.x.empty()) return pts;
  const auto& a = c.applicability;
  constexpr int kOffsets[] = {1, 2, 4, 8, 16, 32};

  std::vector<double> orders;
  for (double nu : axes.nu) orders.push_back(nu);
  const auto [nu_lo, nu_hi] = std::minmax_element(axes.nu.begin(), axes.nu.end());
  for (double e : a.equality_points)
    if (e >= *nu_lo && e <= *nu_hi && std::find(orders.begin(), orders.end(), e) == orders.end())
      orders.push_back(e);

  const int nx = static_cast<int>(axes.x.size());
  const int nn = static_cast<int>(axes.nu.size());
  auto emit = [&](double nu, std::optional<double> mu) {
    for (int j = 0; j < nx; ++j) {
      CasePoint p{nu, mu, axes.x[j], std::nullopt};
      if (!a.needs_second_point) {
        if (expected_direction(c, p) != Expectation::outside) pts.push_back(p);
        continue;
      }
      for (int k : kOffsets) {
        if (j + k >= nx) break;
        p.y = axes.x[j + k];
        if (expected_direction(c, p) != Expectation::outside) pts.push_back(p);
      }
    }
  };

  if (a.needs_second_order) {
    for (int i = 0; i < nn; ++i) {
      emit(axes.nu[i], axes.nu[i]);
      for (int k : kOffsets) {
        if (i + k < nn) emit(axes.nu[i], axes.nu[i + k]);
        if (i - k >= 0) emit(axes.nu[i], axes.nu[i - k]);
      }
    }
  } else {
    for (double nu : orders) emit(nu, std::nullopt);
  }

  std::sort(pts.begin(), pts.end(),
            [](const CasePoint& l, const CasePoint& r) { return point_key(l) < point_key(r); });
  return pts;
}

std::vector<InequalityRecord> sweep_case(const InequalityCase& c, const SweepAxes& axes,
                                         ExecutionMode mode) {
  const auto pts = sweep_points(c, axes);
  std::vector<InequalityRecord> out(pts.size());
  const auto n = static_cast<long>(pts.size());

  auto run_one = [&](long i) {
    try {
      out[i] = evaluate_case(c, pts[i]);
    } catch (const std::exception& e) {
      InequalityRecord rec;
      rec.case_name = c.name;
      rec.point = pts[i];
      rec.expectation = expected_direction(c, pts[i]);
      rec.satisfied = false;
      rec.lhs = rec.rhs = rec.margin = std::numeric_limits<double>::quiet_NaN();
      rec.error = e.what();
      out[i] = std::move(rec);
    }
  };

  if (mode == ExecutionMode::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (long i = 0; i < n; ++i) run_one(i);
  } else {
    for (long i = 0; i < n; ++i) run_one(i);
  }
  return out;
}

// Direct entry points ---------------------------------------------------------

namespace {

InequalityRecord at(std::string_view name, CasePoint p) { return evaluate_case(find_case(name), p); }

}  // namespace

InequalityRecord case_bessel_upper(double nu, double x) { return at("bessel_upper", {nu, {}, x, {}}); }

InequalityRecord case_norm_monotone_nu(double nu, double mu, double x) {
  return at("norm_monotone_nu", {nu, mu, x, {}});
}

TuranRecords case_turan(double nu, double x) {
  const CasePoint p{nu, {}, x, {}};
  return {at("turan_left", p), at("turan_right", p), at("turan_sharpened_lower", p)};
}

InequalityRecord case_ratio_cosh(double nu, double x) { return at("ratio_cosh", {nu, {}, x, {}}); }

InequalityRecord case_log_deriv_positive(double nu, double x) {
  return at("log_deriv_positive", {nu, {}, x, {}});
}

InequalityRecord case_ratio_l32(double nu, double x) { return at("ratio_l32", {nu, {}, x, {}}); }

InequalityRecord case_logderiv_lower_family(LogDerivVariant v, double nu, double t) {
  constexpr std::string_view names[] = {"logderiv_linear", "logderiv_cosh", "logderiv_x2"};
  return at(names[static_cast<int>(v)], {nu, {}, t, {}});
}

InequalityRecord case_two_point_ratio_family(TwoPointVariant v, double nu, double x, double y) {
  constexpr std::string_view names[] = {"twopoint_exp", "twopoint_cosh", "twopoint_x2", "twopoint_power"};
  return at(names[static_cast<int>(v)], {nu, {}, x, y});
}

InequalityRecord case_lowratio_bound(double nu, double x, LowRatioVariant v) {
  return at(v == LowRatioVariant::ratio ? "lowratio" : "xlogderiv_lower", {nu, {}, x, {}});
}

InequalityRecord case_l0_bound(double nu, double x) { return at("l0_bound", {nu, {}, x, {}}); }

InequalityRecord case_exp_upper_family(ExpUpperVariant v, double nu, double x) {
  constexpr std::string_view names[] = {"bessel_exp", "l0_exp", "sinh_upper"};
  return at(names[static_cast<int>(v)], {nu, {}, x, {}});
}

InequalityRecord case_sinh_lower(double nu, double x) { return at("sinh_lower", {nu, {}, x, {}}); }

}  // namespace modstruve
