#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace modstruve {

enum class AxisScale { linear, logarithmic };

/// Rectangular (nu, x) grid. nu is always linearly spaced; x may be log-spaced.
struct GridSpec {
  double nu_min = -1.4;
  double nu_max = 6.0;
  int nu_steps = 64;
  double x_min = 0.05;
  double x_max = 30.0;
  int x_steps = 64;
  AxisScale x_scale = AxisScale::logarithmic;

  /// Throws config_error.
  void validate() const;
  std::vector<double> nu_values() const;
  std::vector<double> x_values() const;
  /// The same syntax parse() accepts.
  std::string to_string() const;

  /// "nu=-1.4:6:64,x=0.05:30:64:log". Either axis may be omitted and keeps its default.
  /// The x axis is linear unless ":log" is given. Throws config_error.
  static GridSpec parse(std::string_view text);
};

/// Explicit node lists, for sweeps over hand-picked points.
struct SweepAxes {
  std::vector<double> nu;
  std::vector<double> x;

  static SweepAxes from(const GridSpec& grid) { return {grid.nu_values(), grid.x_values()}; }
};

}  // namespace modstruve
