#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modstruve/bounds.hpp"
#include "modstruve/grid.hpp"

namespace modstruve {

enum class Direction { increasing, decreasing, log_convex, log_concave, value, ordering };

std::string_view to_string(Direction d);

/// Consecutive differences may undershoot zero by this fraction of the larger value.
inline constexpr double kMonotoneTol = 1e-12;

/// A named claim checked over a grid.
struct PropertyCheck {
  std::string name;
  std::string target;    ///< the function or quantity examined
  std::string citation;  ///< the claim as stated
  std::string domain;
  Direction direction = Direction::increasing;
  /// Nominal spacing of the axis the claim runs along; informational.
  double fd_step = 0.0;
};

struct WorstPoint {
  std::vector<std::pair<std::string, double>> coords;
  /// Normalized signed slack; negative (or non-positive for strict claims) means failure.
  double slack = kInf;
};

struct PropertyResult {
  std::string name;
  Direction direction = Direction::increasing;
  bool pass = true;
  long comparisons = 0;
  long failures = 0;
  WorstPoint worst;
  std::string error;  ///< evaluator failure, which also fails the check

  /// Folds another partial result into this one; the first of equal worst slacks wins.
  void merge(const PropertyResult& other);
};

enum class MonotoneXTarget { bessel_over_struve, norm_ratio_two_orders, log_deriv, closed_ratio_half };
enum class MonotoneNuTarget { norm_struve, successive_ratio, scaled_successive_ratio };

/// Sign of consecutive differences along x for one (nu, mu). mu is read only by
/// norm_ratio_two_orders; nu is ignored by closed_ratio_half.
PropertyResult check_monotone_x(MonotoneXTarget target, Direction dir, double nu, double mu,
                                std::span<const double> x_grid);

/// Sign of consecutive differences along nu at fixed x.
PropertyResult check_monotone_nu(MonotoneNuTarget target, Direction dir, double x,
                                 std::span<const double> nu_grid);

/// Midpoint log-convexity of nu -> 2^nu Gamma(nu+3/2) x^-nu L_nu(x) over grid pairs no further
/// apart than max_distance.
PropertyResult check_logconvex_nu(double x, std::span<const double> nu_grid, double max_distance = 4.0);

/// Strict midpoint log-concavity of nu -> L_nu(x) over grid pairs, plus discrete Wright
/// log-concavity of nu -> 2^{nu+1} x^{-nu-1} L_nu(x) with shifts a in {1/2, 1, 2}.
PropertyResult check_logconcave_nu(double x, std::span<const double> nu_grid, double max_distance = 4.0);

/// Midpoint log-convexity of x -> 1/sqrt(pi) + 2^nu Gamma(nu+3/2) x^-nu L_{nu+1}(x) over all
/// pairs of the x grid.
PropertyResult check_logconvex_x(double nu, std::span<const double> x_grid);

/// The default suite, in report order.
const std::vector<PropertyCheck>& property_catalogue();

/// Throws config_error on an unknown name.
const PropertyCheck& find_property(std::string_view name);

/// Runs one catalogue entry on the grid. Parameter values are processed independently and
/// merged in grid order, so both modes give the same result.
PropertyResult run_property(const PropertyCheck& check, const GridSpec& grid,
                            ExecutionMode mode = ExecutionMode::parallel);

}  // namespace modstruve
