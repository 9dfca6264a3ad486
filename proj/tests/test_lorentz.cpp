#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boostcap/errors.hpp"
#include "boostcap/lorentz.hpp"

using namespace boostcap;

TEST_CASE("generators preserve the metric") {
  CHECK(metric_residual(boost_z(1.7)) < 1e-12);
  CHECK(metric_residual(rotation(Axis::y, 0.4)) < 1e-15);
  CHECK(metric_residual(rotation(Axis::z, -2.1)) < 1e-15);
  CHECK(metric_residual(e2_element(0.3, 1.2, -0.7)) < 1e-13);
  const FourVector p = null_vector(2.0, 0.7, 1.1);
  CHECK(metric_residual(standard_boost(p)) < 1e-12);
}

TEST_CASE("boost_z sign convention") {
  const LorentzMatrix B = boost_z(0.5);
  CHECK(B(0, 3) == doctest::Approx(-std::sinh(0.5)));
  CHECK(B(3, 0) == doctest::Approx(-std::sinh(0.5)));
  CHECK(B(0, 0) == doctest::Approx(std::cosh(0.5)));
}

TEST_CASE("standard boost maps the reference momentum") {
  const FourVector p = null_vector(3.0, 1.1, -0.4);
  const FourVector k = standard_boost(p) * null_vector(1.0, 0.0, 0.0);
  CHECK((k - p).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(standard_boost(FourVector(1.0, 0.0, 0.0, 0.5)), DomainError);
}

TEST_CASE("aberration") {
  CHECK(aberrated_angle(0.3, -1.0) == doctest::Approx(0.7796119368357971604).epsilon(1e-15));
  CHECK(aberrated_angle(0.0, 2.0) == 0.0);
  CHECK(aberrated_angle(1.2, 0.0) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(aberrated_angle(aberrated_angle(0.9, 0.8), -0.8) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK_THROWS_AS(aberrated_angle(-0.1, 0.0), DomainError);
}

TEST_CASE("z boosts have trivial Wigner angle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> z(-2.0, 2.0), t(0.05, 3.09), f(0.0, 6.28), w(0.2, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double zeta = z(rng), theta = t(rng), phi = f(rng), omega = w(rng);
    const auto d = little_group(boost_z(zeta), null_vector(omega, theta, phi));
    CHECK(std::abs(d.wigner_angle) < 1e-10);
    CHECK(std::abs(d.a2) < 1e-10);
    const double a1 = std::sin(theta) / (omega * (1.0 / std::tanh(zeta) - std::cos(theta)));
    CHECK(std::abs(d.a1 - a1) < 1e-10);
    CHECK(d.residual < 1e-10);
  }
}

TEST_CASE("rotations about y give a nonzero Wigner angle") {
  const auto d = little_group(rotation(Axis::y, 0.6), null_vector(1.0, 0.8, 0.9));
  CHECK(std::abs(d.wigner_angle) > 1e-3);
  CHECK(d.residual < 1e-10);
}
