#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "betapend/gamma.hpp"
#include "betapend/errors.hpp"

using namespace betapend;

namespace {

// ln((n-1)!) accumulated in extended precision; reference for integer
// arguments.
double log_gamma_integer_oracle(int n) {
  long double sum = 0.0L;
  for (int k = 2; k < n; ++k) sum += std::log(static_cast<long double>(k));
  return static_cast<double>(sum);
}

// ln Gamma(m + 1/2) from the recurrence anchored at Gamma(1/2) = sqrt(pi).
double log_gamma_half_oracle(int m) {
  long double sum = 0.5L * std::log(static_cast<long double>(std::numbers::pi));
  for (int j = 0; j < m; ++j)
    sum += std::log(static_cast<long double>(j) + 0.5L);
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("log_gamma: exact values at small anchors") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("log_gamma: factorial oracle across (0, 170]") {
  for (int n = 3; n <= 170; ++n) {
    const double oracle = log_gamma_integer_oracle(n);
    CHECK(std::abs(log_gamma(n) - oracle) <= 1e-13 * std::max(1.0, oracle));
  }
}

TEST_CASE("log_gamma: half-integer oracle") {
  for (int m = 0; m <= 150; ++m) {
    const double oracle = log_gamma_half_oracle(m);
    CHECK(std::abs(log_gamma(m + 0.5) - oracle) <=
          1e-13 * std::max(1.0, std::abs(oracle)));
  }
}

TEST_CASE("log_gamma: agrees with libm lgamma") {
  for (double x = 0.05; x <= 170.0; x += 0.37) {
    const double reference = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - reference) <=
          1e-12 * std::max(1.0, std::abs(reference)));
  }
}

TEST_CASE("log_gamma: accurate approaching the pole at zero") {
  for (const double x : {1e-300, 1e-12, 1e-8, 1e-4, 0.01, 0.1, 0.25, 0.4999}) {
    const double reference = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - reference) <= 1e-13 * std::abs(reference));
  }
}

TEST_CASE("log_gamma: monotone increasing for x >= 2") {
  double previous = log_gamma(2.0);
  for (double x = 2.125; x <= 170.0; x += 0.125) {
    const double current = log_gamma(x);
    CHECK(current > previous);
    previous = current;
  }
}

TEST_CASE("log_gamma: domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-3.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()),
                  DomainError);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("euler_beta_closed: anchor values") {
  CHECK(euler_beta_closed(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(euler_beta_closed(2.0, 3.0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(euler_beta_closed(0.5, 0.5) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("euler_beta_closed: exact symmetry") {
  const double xs[] = {0.25, 0.5, 1.0, 1.75, 3.0, 7.5, 20.0};
  for (const double x : xs)
    for (const double y : xs)
      CHECK(euler_beta_closed(x, y) == euler_beta_closed(y, x));
}

TEST_CASE("euler_beta_closed: recurrence B(x+1,y) = B(x,y) x/(x+y)") {
  const double grid[] = {0.25, 0.5, 1.0, 2.0, 3.75, 7.5, 12.0, 20.0};
  for (const double x : grid) {
    for (const double y : grid) {
      const double lhs = euler_beta_closed(x + 1.0, y);
      const double rhs = euler_beta_closed(x, y) * x / (x + y);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  }
}

TEST_CASE("euler_beta_closed: boundary law B(x,1) = 1/x") {
  for (double x = 0.25; x <= 50.0; x += 0.73)
    CHECK(std::abs(euler_beta_closed(x, 1.0) - 1.0 / x) <= 1e-13 / x);
}

TEST_CASE("euler_beta_closed: domain errors") {
  CHECK_THROWS_AS(euler_beta_closed(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(euler_beta_closed(1.0, -2.0), DomainError);
}

TEST_CASE("euler_beta_integral: anchor values") {
  CHECK(euler_beta_integral(1.0, 2.0).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(euler_beta_integral(3.0, 3.0).value ==
        doctest::Approx(1.0 / 30.0).epsilon(1e-10));
  CHECK(euler_beta_integral(0.5, 1.5).value ==
        doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-10));
}

TEST_CASE("euler_beta_integral: matches the closed form on the test grid") {
  const double grid[] = {0.5, 1.0, 1.5, 2.0, 3.25, 7.0};
  for (const double x : grid) {
    for (const double y : grid) {
      const double closed = euler_beta_closed(x, y);
      const QuadResult integral = euler_beta_integral(x, y);
      CHECK(std::abs(integral.value - closed) <=
            std::max(1e-8 * closed, 1e-10));
    }
  }
}

TEST_CASE("euler_beta_integral: strongly singular but integrable corner") {
  // both exponents below zero: x = y = 0.25
  const double closed = euler_beta_closed(0.25, 0.25);
  const QuadResult integral = euler_beta_integral(0.25, 0.25);
  CHECK(std::abs(integral.value - closed) <= 1e-7 * closed);
}
