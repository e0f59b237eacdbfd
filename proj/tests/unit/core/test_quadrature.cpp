#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "core/quadrature.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

TEST_CASE("principal value of 1/(x-p) matches the logarithm") {
  testgen::Gen g(21);
  for (int i = 0; i < 100; ++i) {
    const double a = g.uniform(0.0, 1.0), b = a + g.log_uniform(0.1, 1e3);
    const double p = g.uniform(a, b);
    const Quadrature q = principal_value([](double) { return 1.0; }, a, b, p);
    const double exact = std::log((b - p) / (p - a));
    CHECK(std::abs(q.value - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("principal value with a smooth numerator") {
  // P int_0^2 x^2/(x-1) dx = int (x + 1) dx + P int 1/(x-1) dx = 4 + 0.
  const Quadrature q = principal_value([](double x) { return x * x; }, 0.0, 2.0, 1.0);
  CHECK(q.value == doctest::Approx(4.0).epsilon(1e-12));
  // Pole outside: ordinary integral of 1/(x+1) on [0,1].
  const Quadrature o = principal_value([](double) { return 1.0; }, 0.0, 1.0, -1.0);
  CHECK(o.value == doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("pole on an endpoint") {
  CHECK_THROWS_AS(principal_value([](double) { return 1.0; }, 0.0, 1.0, 0.0), DomainError);
  const Quadrature q = principal_value([](double x) { return x; }, 0.0, 1.0, 0.0);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("graded integration of a peaked integrand") {
  const double c = 1e3;
  const Quadrature q = integrate_graded([](double x) { return 1.0 / (1.0 + x); }, 0.0, c, 0.0);
  CHECK(q.value == doctest::Approx(std::log1p(c)).epsilon(1e-12));
  CHECK(q.error_estimate < 1e-8);
}

TEST_CASE("quadrature argument checks") {
  CHECK_THROWS_AS(principal_value([](double) { return 1.0; }, 1.0, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(principal_value([](double) { return 1.0; }, 0.0, 1.0, 0.5, 4), ConfigError);
  CHECK_THROWS_AS(integrate_graded([](double) { return NAN; }, 0.0, 1.0, 0.0), IntegratorError);
}
