#include <cmath>
#include <string>
#include <vector>

#include "modstruve/errors.hpp"
#include "modstruve/struve.hpp"

namespace modstruve {

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing:
      return "increasing";
    case Monotonicity::decreasing:
      return "decreasing";
    case Monotonicity::constant:
      return "constant";
    case Monotonicity::neither:
      return "neither";
  }
  return "unknown";
}

Monotonicity quotient_sequence_monotone(const CoefficientFn& numer, const CoefficientFn& denom,
                                        int n_max) {
  if (n_max < 2) throw domain_error("quotient_sequence_monotone requires n_max >= 2");
  constexpr double kTieTol = 1e-14;

  std::vector<double> q;
  q.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double a = numer(n);
    const double b = denom(n);
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw domain_error("coefficient " + std::to_string(n) + " is not a positive finite real");
    q.push_back(a / b);
  }

  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    const double d = q[i + 1] - q[i];
    if (std::fabs(d) <= kTieTol * std::max(std::fabs(q[i]), std::fabs(q[i + 1]))) continue;
    (d > 0.0 ? up : down) = true;
  }
  if (up && down) return Monotonicity::neither;
  if (up) return Monotonicity::increasing;
  if (down) return Monotonicity::decreasing;
  return Monotonicity::constant;
}

}  // namespace modstruve
