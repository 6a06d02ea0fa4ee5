#include "modstruve/grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "modstruve/errors.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v))
    throw config_error("grid: cannot read " + std::string(what) + " from '" + std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end)
    throw config_error("grid: cannot read " + std::string(what) + " from '" + std::string(s) + "'");
  return v;
}

std::string fmt_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

void GridSpec::validate() const {
  if (!(nu_min < nu_max)) throw config_error("grid: nu_min must be below nu_max");
  if (!(x_min > 0.0) || !(x_min < x_max)) throw config_error("grid: need 0 < x_min < x_max");
  if (nu_steps < 2 || x_steps < 2) throw config_error("grid: each axis needs at least 2 steps");
  if (nu_steps > 4096 || x_steps > 4096) throw config_error("grid: at most 4096 steps per axis");
  if (nu_min <= -1.5) throw config_error("grid: nu_min must exceed -1.5");
  if (x_max > kSeriesMaxX) throw config_error("grid: x_max must not exceed 50");
  if (!std::isfinite(nu_max)) throw config_error("grid: nu_max must be finite");
}

std::vector<double> GridSpec::nu_values() const {
  std::vector<double> v(static_cast<std::size_t>(nu_steps));
  for (int i = 0; i < nu_steps; ++i) v[i] = nu_min + (nu_max - nu_min) * i / (nu_steps - 1);
  v.back() = nu_max;
  return v;
}

std::vector<double> GridSpec::x_values() const {
  std::vector<double> v(static_cast<std::size_t>(x_steps));
  for (int i = 0; i < x_steps; ++i) {
    const double f = static_cast<double>(i) / (x_steps - 1);
    v[i] = x_scale == AxisScale::logarithmic ? x_min * std::pow(x_max / x_min, f)
                                             : x_min + (x_max - x_min) * f;
  }
  v.front() = x_min;
  v.back() = x_max;
  return v;
}

std::string GridSpec::to_string() const {
  return "nu=" + fmt_double(nu_min) + ":" + fmt_double(nu_max) + ":" + std::to_string(nu_steps) +
         ",x=" + fmt_double(x_min) + ":" + fmt_double(x_max) + ":" + std::to_string(x_steps) +
         (x_scale == AxisScale::logarithmic ? ":log" : ":lin");
}

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec g;
  if (text.empty()) throw config_error("grid: empty specification");
  bool seen_nu = false;
  bool seen_x = false;
  for (auto part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw config_error("grid: expected axis=..., got '" + std::string(part) + "'");
    const auto axis = part.substr(0, eq);
    const auto fields = split(part.substr(eq + 1), ':');
    if (axis == "nu") {
      if (seen_nu) throw config_error("grid: nu given twice");
      seen_nu = true;
      if (fields.size() != 3) throw config_error("grid: nu takes min:max:steps");
      g.nu_min = parse_double(fields[0], "nu_min");
      g.nu_max = parse_double(fields[1], "nu_max");
      g.nu_steps = parse_int(fields[2], "nu_steps");
    } else if (axis == "x") {
      if (seen_x) throw config_error("grid: x given twice");
      seen_x = true;
      if (fields.size() != 3 && fields.size() != 4) throw config_error("grid: x takes min:max:steps[:lin|log]");
      g.x_min = parse_double(fields[0], "x_min");
      g.x_max = parse_double(fields[1], "x_max");
      g.x_steps = parse_int(fields[2], "x_steps");
      g.x_scale = AxisScale::linear;
      if (fields.size() == 4) {
        if (fields[3] == "log") g.x_scale = AxisScale::logarithmic;
        else if (fields[3] != "lin") throw config_error("grid: unknown x scale '" + std::string(fields[3]) + "'");
      }
    } else {
      throw config_error("grid: unknown axis '" + std::string(axis) + "'");
    }
  }
  g.validate();
  return g;
}

}  // namespace modstruve
