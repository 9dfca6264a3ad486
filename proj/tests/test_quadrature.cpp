#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "boostcap/errors.hpp"
#include "boostcap/quadrature.hpp"

using namespace boostcap;

TEST_CASE("scalar integrals") {
  const std::array<double, 2> unit{0.0, 1.0};
  const auto r = integrate_scalar([](double x) { return std::exp(x); }, unit, {});
  CHECK(r.value[0] == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  const std::array<double, 3> pts{0.0, 0.5, 1.0};
  const auto s = integrate_scalar([](double x) { return std::sqrt(x); }, pts, {});
  CHECK(s.value[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("vector integrand shares panels") {
  const std::array<double, 2> pts{0.0, std::numbers::pi};
  const auto r = integrate<3>(
      [](double x) { return std::array<double, 3>{std::sin(x), x * x, 1.0}; }, pts, {});
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.value[1] == doctest::Approx(std::pow(std::numbers::pi, 3) / 3).epsilon(1e-13));
  CHECK(r.value[2] == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("config validation and convergence failure") {
  CHECK_THROWS_AS((QuadratureConfig{-1.0, 1e-8, 10}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureConfig{0.0, 0.0, 10}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureConfig{0.0, 1e-8, 0}.validate()), DomainError);
  const std::array<double, 2> pts{0.0, 1.0};
  CHECK_THROWS_AS(integrate_scalar([](double x) { return std::sin(1.0 / (x + 1e-6)); }, pts,
                                   QuadratureConfig{0.0, 1e-14, 3}),
                  ConvergenceError);
}
