#include "modstruve/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "modstruve/errors.hpp"

namespace modstruve {

namespace {

constexpr int kFactorialCount = 171;  // 170! is the largest finite factorial

const std::array<double, kFactorialCount>& factorial_table() {
  static const std::array<double, kFactorialCount> table = [] {
    std::array<double, kFactorialCount> f{};
    f[0] = 1.0;
    for (int i = 1; i < kFactorialCount; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  return table;
}

bool is_small_positive_integer(double a) {
  return a >= 1.0 && a <= kFactorialCount && a == std::floor(a);
}

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,      1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0,      -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

// B_{2k} / (2k), k = 1..8
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0,  -3617.0 / 8160.0};

constexpr double kLiftThreshold = 10.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

double stirling_lgamma(double a) {
  const double inv = 1.0 / a;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (double c : kStirling) {
    series += c * p;
    p *= inv2;
  }
  return (a - 0.5) * std::log(a) - a + kHalfLog2Pi + series;
}

}  // namespace

void AccuracySpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw domain_error("AccuracySpec.rel_tol must lie in (0, 1), got " + std::to_string(rel_tol));
  if (max_terms < 1)
    throw domain_error("AccuracySpec.max_terms must be >= 1, got " + std::to_string(max_terms));
}

double lgamma(double a) {
  if (!(a > 0.0)) throw domain_error("lgamma requires a > 0, got " + std::to_string(a));
  if (std::isinf(a)) return a;
  if (is_small_positive_integer(a)) return std::log(factorial_table()[static_cast<int>(a) - 1]);

  double log_shift = 0.0;
  if (a < kLiftThreshold) {
    double prod = 1.0;
    while (a < kLiftThreshold) {
      prod *= a;
      a += 1.0;
    }
    log_shift = std::log(prod);
  }
  return stirling_lgamma(a) - log_shift;
}

double sin_pi(double a) {
  if (!std::isfinite(a)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::nearbyint(a);
  const double r = a - n;  // exact, |r| <= 1/2
  if (r == 0.0) return 0.0;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -s : s;
}

double recip_gamma(double a) {
  if (std::isnan(a)) return a;
  if (a > 0.0) {
    if (is_small_positive_integer(a)) return 1.0 / factorial_table()[static_cast<int>(a) - 1];
    return std::exp(-lgamma(a));
  }
  if (a == std::floor(a)) return 0.0;

  if (a > -20.0) {
    // 1/Gamma(a) = a (a+1) ... (a+k-1) / Gamma(a+k) with a+k in (0, 1]
    double prod = 1.0;
    while (a <= 0.0) {
      prod *= a;
      a += 1.0;
    }
    return prod * recip_gamma(a);
  }

  // reflection: 1/Gamma(a) = sin(pi a) Gamma(1-a) / pi
  const double s = sin_pi(a);
  const double mag = std::exp(lgamma(1.0 - a) + std::log(std::fabs(s)) - std::log(std::numbers::pi));
  return s < 0.0 ? -mag : mag;
}

double digamma(double a) {
  if (!(a > 0.0)) throw domain_error("digamma requires a > 0, got " + std::to_string(a));
  double acc = 0.0;
  while (a < kLiftThreshold) {
    acc -= 1.0 / a;
    a += 1.0;
  }
  const double inv2 = 1.0 / (a * a);
  double series = 0.0;
  double p = inv2;
  for (double c : kDigammaAsym) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(a) - 0.5 / a - series;
}

double log_pochhammer(double a, int n) {
  if (!(a > 0.0)) throw domain_error("log_pochhammer requires a > 0, got " + std::to_string(a));
  if (n < 0) throw domain_error("log_pochhammer requires n >= 0, got " + std::to_string(n));
  if (n == 0) return 0.0;
  if (n > 1000) return lgamma(a + n) - lgamma(a);
  CompensatedSum s;
  for (int k = 0; k < n; ++k) s += std::log(a + k);
  return s.value();
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (!std::isfinite(t)) throw overflow_error("compensated sum left the representable range");
  if (std::fabs(sum_) >= std::fabs(v))
    carry_ += (sum_ - t) + v;
  else
    carry_ += (v - t) + sum_;
  sum_ = t;
  abs_sum_ += std::fabs(v);
}

double compensated_sum(std::span<const double> terms) {
  CompensatedSum s;
  for (double v : terms) {
    if (!std::isfinite(v)) throw domain_error("compensated_sum requires finite terms");
    s += v;
  }
  return s.value();
}

}  // namespace modstruve
