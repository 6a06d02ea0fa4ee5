#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modstruve/grid.hpp"

namespace modstruve {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Orders closer than this to a domain boundary, reversal boundary or equality point are
/// left out of sweeps; equality points themselves are swept separately.
inline constexpr double kBoundaryExclusion = 1e-3;

/// Relative band |margin| <= kEqualityTol * max(|lhs|, |rhs|) accepted at equality points.
inline constexpr double kEqualityTol = 1e-10;

/// Open interval (lo, hi).
struct Interval {
  double lo = -kInf;
  double hi = kInf;

  bool contains(double v) const { return v > lo && v < hi; }
};

struct Applicability {
  Interval nu_range;
  bool needs_second_order = false;  ///< the case reads mu
  bool needs_second_point = false;  ///< the case reads y, with x < y
  std::optional<Interval> reversal_nu_range;
  std::vector<double> equality_points;
};

enum class Relation { strict_less, less_or_equal };

/// What a record is expected to show at its point.
enum class Expectation { holds, reversed, equality, outside };

std::string_view to_string(Relation r);
std::string_view to_string(Expectation e);

struct CasePoint {
  double nu = 0.0;
  std::optional<double> mu;
  double x = 1.0;
  std::optional<double> y;
};

/// Both sides of "lhs < rhs". margin is rhs - lhs unless the case can compute it without
/// the cancellation of that subtraction.
struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = std::numeric_limits<double>::quiet_NaN();
};

struct InequalityCase {
  std::string name;
  std::string citation;
  Applicability applicability;
  Relation relation = Relation::strict_less;
  std::function<Sides(const CasePoint&)> sides;
  /// Overrides the nu-range lookup, for cases whose direction depends on the point itself.
  std::function<Expectation(const CasePoint&)> direction;
};

struct InequalityRecord {
  std::string case_name;
  CasePoint point;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Expectation expectation = Expectation::holds;
  bool satisfied = false;
  std::string error;  ///< evaluator failure at this point; empty on success
};

/// All cases of the registry, in catalogue order.
const std::vector<InequalityCase>& registry();

/// Throws config_error on an unknown name.
const InequalityCase& find_case(std::string_view name);

/// The expected direction at a point, or outside when the point is not in any stated range
/// or lies within kBoundaryExclusion of a boundary.
Expectation expected_direction(const InequalityCase& c, const CasePoint& p);

/// Evaluates both sides and judges them against expected_direction. Evaluator exceptions
/// propagate.
InequalityRecord evaluate_case(const InequalityCase& c, const CasePoint& p);

/// Copy of c with its two sides exchanged, for negative controls.
InequalityCase inverted(const InequalityCase& c);

enum class ExecutionMode { serial, parallel };

/// Every point a sweep of c visits on the given axes: in-range orders at every x, equality
/// points at every x, mu from nu-index offsets +-{1,2,4,8,16,32} plus mu = nu, and y from
/// x-index offsets {1,2,4,8,16,32}.
std::vector<CasePoint> sweep_points(const InequalityCase& c, const SweepAxes& axes);

/// One record per sweep point, ordered by (nu, mu, x, y). Evaluator failures are recorded in
/// InequalityRecord::error. The serial and parallel kernels return identical lists.
std::vector<InequalityRecord> sweep_case(const InequalityCase& c, const SweepAxes& axes,
                                         ExecutionMode mode = ExecutionMode::parallel);

// Direct entry points ---------------------------------------------------------

InequalityRecord case_bessel_upper(double nu, double x);
InequalityRecord case_norm_monotone_nu(double nu, double mu, double x);

struct TuranRecords {
  InequalityRecord left;             ///< 0 < Delta
  InequalityRecord right;            ///< Delta < L^2 / (nu + 3/2)
  InequalityRecord sharpened_lower;  ///< pi/4 (x/2)^{2nu+2} / ((nu+3/2) Gamma(nu+3/2)^2) < Delta
};
TuranRecords case_turan(double nu, double x);

InequalityRecord case_ratio_cosh(double nu, double x);
InequalityRecord case_log_deriv_positive(double nu, double x);
InequalityRecord case_ratio_l32(double nu, double x);

enum class LogDerivVariant { linear, cosh, x2 };
InequalityRecord case_logderiv_lower_family(LogDerivVariant v, double nu, double t);

enum class TwoPointVariant { exp, cosh, x2, power };
InequalityRecord case_two_point_ratio_family(TwoPointVariant v, double nu, double x, double y);

enum class LowRatioVariant { ratio, xlogderiv };
InequalityRecord case_lowratio_bound(double nu, double x, LowRatioVariant v = LowRatioVariant::ratio);

InequalityRecord case_l0_bound(double nu, double x);

enum class ExpUpperVariant { bessel_exp, l0_exp, sinh };
InequalityRecord case_exp_upper_family(ExpUpperVariant v, double nu, double x);

InequalityRecord case_sinh_lower(double nu, double x);

}  // namespace modstruve
