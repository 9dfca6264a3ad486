#include <doctest.h>

#include <cmath>
#include <numbers>

#include "boostcap/errors.hpp"
#include "boostcap/wavepacket.hpp"

using namespace boostcap;

TEST_CASE("aberration cutoff") {
  CHECK(theta_c(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(theta_c(-5.0) == doctest::Approx(0.013475690068845597049).epsilon(1e-12));
  CHECK(theta_c(3.0) > std::numbers::pi / 2);
}

TEST_CASE("kernel and envelope reference values") {
  CHECK(kernel(std::numbers::pi / 4, PacketFrame::make(1.0, 0.0)) ==
        doctest::Approx(std::sqrt(2.0) * std::exp(-1.0)).epsilon(1e-15));
  CHECK(kernel(std::numbers::pi / 4, PacketFrame::make(1.0, 0.0)) ==
        doctest::Approx(0.52026009502288889636).epsilon(1e-15));
  CHECK(envelope_sq(0.3, PacketFrame::make(0.5, -1.0)) ==
        doctest::Approx(0.094416206362380330112).epsilon(1e-13));
  const PacketFrame f = PacketFrame::make(0.7, 0.4);
  CHECK(kernel(0.0, f) == 0.0);
  CHECK(kernel(theta_c(0.4), f) == 0.0);
  CHECK(std::exp(log_kernel(1.0, f)) == doctest::Approx(kernel(1.0, f)).epsilon(1e-14));
  CHECK_THROWS_AS(kernel(theta_c(0.4) + 0.1, f), DomainError);
  CHECK_THROWS_AS(PacketFrame::make(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(PacketFrame::make(1.0, NAN), DomainError);
}

TEST_CASE("normalization") {
  const QuadratureConfig q = QuadratureConfig::verification();
  CHECK(normalization({0.5, 0.0}, NormalizationMethod::closed_form, q) ==
        doctest::Approx(0.71106344733477885506).epsilon(1e-14));
  CHECK(normalization({1.0, 0.0}, NormalizationMethod::closed_form, q) ==
        doctest::Approx(2.3809255980938028154).epsilon(1e-14));
  for (double gamma : {0.05, 1.0, 20.0})
    for (double zeta : {-3.0, -0.5, 0.0, 1.5}) {
      const double a = normalization({gamma, zeta}, NormalizationMethod::quadrature, q);
      const double b = normalization({gamma, zeta}, NormalizationMethod::closed_form, q);
      CHECK(std::abs(a - b) <= 1e-9 * b);
    }
  CHECK(rest_frame_trace(1.0) == doctest::Approx(0.37893607807065605302).epsilon(1e-12));
}

TEST_CASE("breakpoints are sorted and span the support") {
  for (double zeta : {-4.0, -0.3, 0.0, 2.0}) {
    const auto pts = theta_breakpoints(PacketFrame::make(0.8, zeta));
    REQUIRE(pts.size() >= 2);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == doctest::Approx(theta_c(zeta)));
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i] > pts[i - 1]);
  }
}
