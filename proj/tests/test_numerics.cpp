#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "modstruve/errors.hpp"
#include "modstruve/numerics.hpp"
#include "reference_values.hpp"

using namespace modstruve;

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
}

TEST_CASE("lgamma trivial values") {
  CHECK(modstruve::lgamma(1.0) == 0.0);
  CHECK(modstruve::lgamma(2.0) == 0.0);
  CHECK(modstruve::lgamma(0.5) == doctest::Approx(std::log(std::sqrt(std::numbers::pi))).epsilon(1e-15));
  CHECK(modstruve::lgamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
}

TEST_CASE("lgamma against 40-digit reference") {
  for (const auto& r : reference::kLogGamma) {
    CAPTURE(r.a);
    const double got = modstruve::lgamma(r.a);
    CHECK(std::fabs(got - r.value) <= 1e-14 * std::max(1.0, std::fabs(r.value)));
  }
}

TEST_CASE("lgamma rejects nonpositive arguments") {
  CHECK_THROWS_AS(modstruve::lgamma(0.0), domain_error);
  CHECK_THROWS_AS(modstruve::lgamma(-1.5), domain_error);
  CHECK_THROWS_AS(modstruve::lgamma(std::numeric_limits<double>::quiet_NaN()), domain_error);
}

TEST_CASE("lgamma agrees with the C library on a dense sweep") {
  for (double a = 0.01; a < 60.0; a *= 1.037) {
    CAPTURE(a);
    const double ref = std::lgamma(a);
    CHECK(std::fabs(modstruve::lgamma(a) - ref) <= 2e-14 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("recip_gamma values and poles") {
  CHECK(recip_gamma(0.0) == 0.0);
  CHECK(recip_gamma(1.0) == 1.0);
  for (double pole : {0.0, -1.0, -2.0, -3.0, -17.0}) CHECK(recip_gamma(pole) == 0.0);
  // reflection oracle: Gamma(-1/2) = -2 sqrt(pi)
  CHECK(recip_gamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-15));
  for (const auto& r : reference::kRecipGamma) {
    CAPTURE(r.a);
    CHECK(recip_gamma(r.a) == doctest::Approx(r.value).epsilon(1e-13));
  }
}

TEST_CASE("recip_gamma times Gamma is one on (0, 50]") {
  std::mt19937_64 rng(20161014);
  std::uniform_real_distribution<double> dist(1e-6, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = dist(rng);
    CAPTURE(a);
    CHECK(recip_gamma(a) * std::exp(modstruve::lgamma(a)) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("recip_gamma satisfies the shift recurrence across the poles") {
  // 1/Gamma(a) = a / Gamma(a+1) holds for every real a
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-25.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = dist(rng);
    CAPTURE(a);
    const double lhs = recip_gamma(a);
    const double rhs = a * recip_gamma(a + 1.0);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(std::fabs(lhs), 1e-300));
  }
}

TEST_CASE("digamma values") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(digamma(1.0) + 1.0).epsilon(1e-14));
  // duplication identity at a = 1/2 gives psi(1/2) = psi(1) - 2 ln 2
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::numbers::ln2).epsilon(1e-13));
  for (const auto& r : reference::kDigamma) {
    CAPTURE(r.a);
    CHECK(std::fabs(digamma(r.a) - r.value) <= 1e-12 * std::max(1.0, std::fabs(r.value)));
  }
  CHECK_THROWS_AS(digamma(0.0), domain_error);
  CHECK_THROWS_AS(digamma(-2.5), domain_error);
}

TEST_CASE("digamma duplication identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.05, 40.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = dist(rng);
    CAPTURE(a);
    const double lhs = digamma(2.0 * a);
    const double rhs = 0.5 * digamma(a) + 0.5 * digamma(a + 0.5) + std::numbers::ln2;
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("digamma is increasing on [0.1, 20]") {
  double prev = digamma(0.1);
  for (double a = 0.1 + 0.01; a <= 20.0; a += 0.01) {
    const double cur = digamma(a);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("lgamma is midpoint convex") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.01, 80.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    CAPTURE(a);
    CAPTURE(b);
    const double mid = modstruve::lgamma(0.5 * (a + b));
    const double avg = 0.5 * (modstruve::lgamma(a) + modstruve::lgamma(b));
    CHECK(mid <= avg + 1e-14 * std::max(1.0, std::fabs(avg)));
  }
}

TEST_CASE("log_pochhammer") {
  CHECK(log_pochhammer(3.7, 0) == 0.0);
  CHECK(log_pochhammer(1.0, 4) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  CHECK(log_pochhammer(1.5, 2) == doctest::Approx(std::log(3.75)).epsilon(1e-15));
  for (double a : {0.01, 0.5, 2.25, 9.0, 33.3}) {
    for (int n : {1, 3, 10, 57, 400, 2000}) {
      CAPTURE(a);
      CAPTURE(n);
      const double ref = modstruve::lgamma(a + n) - modstruve::lgamma(a);
      CHECK(std::fabs(log_pochhammer(a, n) - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
    }
  }
  CHECK_THROWS_AS(log_pochhammer(0.0, 2), domain_error);
  CHECK_THROWS_AS(log_pochhammer(1.0, -1), domain_error);
}

TEST_CASE("compensated_sum") {
  CHECK(compensated_sum(std::vector<double>{1.0, -1.0, 1e-20}) == 1e-20);
  CHECK(compensated_sum(std::vector<double>{}) == 0.0);
  CHECK(std::fabs(compensated_sum(std::vector<double>(10, 0.1)) - 1.0) <= 1e-15);
  CHECK(compensated_sum(std::vector<double>{1e30, 1e-30, -1e30}) == 1e-30);
  const double big = std::numeric_limits<double>::max();
  CHECK_THROWS_AS(compensated_sum(std::vector<double>{big, big}), overflow_error);
  CHECK_THROWS_AS(compensated_sum(std::vector<double>{1.0, std::numeric_limits<double>::infinity()}),
                  domain_error);
}

TEST_CASE("compensated_sum error stays within 2 eps of the absolute sum") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> terms;
    long double exact = 0.0L;
    double abs_sum = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double v = std::ldexp(mant(rng), expo(rng));
      terms.push_back(v);
      exact += v;
      abs_sum += std::fabs(v);
    }
    const double got = compensated_sum(terms);
    CHECK(std::fabs(static_cast<long double>(got) - exact) <=
          2.0L * std::numeric_limits<double>::epsilon() * abs_sum);
  }
}

TEST_CASE("AccuracySpec validation") {
  CHECK_NOTHROW(AccuracySpec{}.validate());
  CHECK_THROWS_AS((AccuracySpec{0.0, 10}.validate()), domain_error);
  CHECK_THROWS_AS((AccuracySpec{1.0, 10}.validate()), domain_error);
  CHECK_THROWS_AS((AccuracySpec{1e-10, 0}.validate()), domain_error);
}
