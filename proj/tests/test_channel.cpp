#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "boostcap/channel.hpp"
#include "boostcap/errors.hpp"

using namespace boostcap;

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Fixed-order tensor-product rule for λ at ζ = 0, written directly from the
// channel integrals over the full φ range.
std::array<double, 3> lambda_oracle(double gamma) {
  std::vector<double> x, w;
  gauss_legendre(40, x, w);
  const double half_pi = std::numbers::pi / 2;
  const int panels_t = 24, panels_p = 16;
  double n = 0, i5 = 0, i6 = 0, i2 = 0;
  for (int pt = 0; pt < panels_t; ++pt) {
    const double t0 = half_pi * pt / panels_t, t1 = half_pi * (pt + 1) / panels_t;
    for (int i = 0; i < 40; ++i) {
      const double th = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * x[i];
      const double wt = 0.5 * (t1 - t0) * w[i];
      const double c = std::cos(th), s = std::sin(th);
      const double k = std::exp(-(s * s) / (c * c) / (gamma * gamma)) * s / (c * c);
      if (k == 0.0) continue;
      for (int pp = 0; pp < panels_p; ++pp) {
        const double f0 = 2 * std::numbers::pi * pp / panels_p;
        const double f1 = 2 * std::numbers::pi * (pp + 1) / panels_p;
        for (int j = 0; j < 40; ++j) {
          const double ph = 0.5 * (f0 + f1) + 0.5 * (f1 - f0) * x[j];
          const double wp = 0.5 * (f1 - f0) * w[j];
          const double cp = std::cos(ph), sp = std::sin(ph);
          const double c2p = std::cos(2 * ph), s2p = std::sin(2 * ph);
          const double a = 1.0 - cp * cp * s * s, b = 1.0 - sp * sp * s * s;
          const double g2 =
              0.5 * (cp * cp * c2p * c * c - c2p * sp * sp + c * s2p * s2p);
          const double g5 = 0.25 * (2 * c2p * c2p * c + s2p * s2p + c * c * s2p * s2p);
          const double g6 = -0.5 * c;
          const double ww = wt * wp * k;
          n += ww;
          i5 += ww * g5 / std::sqrt(a * b);
          i6 += ww * g6 / std::sqrt(a * b);
          i2 += ww * g2 / a;
        }
      }
    }
  }
  return {2 * i5 / n, -2 * i6 / n, 2 * i2 / n};
}

}  // namespace

TEST_CASE("lambda against an independent fixed-order rule") {
  const auto o = lambda_oracle(1.0);
  const PauliLambda l = lambda_numeric({1.0, 0.0});
  CHECK(std::abs(l.l1 - o[0]) < 1e-9);
  CHECK(std::abs(l.l2 - o[1]) < 1e-9);
  CHECK(std::abs(l.l3 - o[2]) < 1e-9);
}

// Values from an independent mpmath 2D quadrature.
TEST_CASE("lambda reference values at zeta = 0") {
  struct Row { double gamma, l1, l2, l3; };
  for (const Row& r : {Row{0.1, 0.99999999979, 0.99998797856, 0.99998797835},
                       Row{0.5, 0.99998481078, 0.99602512725, 0.99601034471},
                       Row{1.0, 0.99958486535, 0.97563293102, 0.97525749930},
                       Row{2.0, 0.99590421723, 0.91285775779, 0.90964386664},
                       Row{5.0, 0.97261708380, 0.74988644172, 0.73363226730}}) {
    const PauliLambda l = lambda_numeric({r.gamma, 0.0});
    CHECK(std::abs(l.l1 - r.l1) < 2e-11);
    CHECK(std::abs(l.l2 - r.l2) < 2e-11);
    CHECK(std::abs(l.l3 - r.l3) < 2e-11);
  }
}

TEST_CASE("lambda3 closed form") {
  CHECK(lambda3_closed(0.5) == doctest::Approx(0.99601034471261188164).epsilon(1e-12));
  CHECK(lambda3_closed(1.0) == doctest::Approx(0.97525749930080534362).epsilon(1e-12));
  CHECK(lambda3_closed(2.0) == doctest::Approx(0.90964386664420396725).epsilon(1e-12));
  CHECK(lambda3_closed(5.0) == doctest::Approx(0.73363226729692129928).epsilon(1e-12));
  CHECK_THROWS_AS(lambda3_closed(0.1), RangeError);
}

TEST_CASE("lambda2 tends to +1 for narrow packets") {
  CHECK(lambda_numeric({0.02, 0.0}).l2 > 0.9999);
  CHECK(lambda_numeric({0.02, -1.0}).l2 > 0.9999);
}

TEST_CASE("lambda1 grows as zeta decreases") {
  double prev = -1.0;
  for (double zeta : {2.0, 1.0, 0.0, -1.0, -2.0}) {
    const double l1 = lambda_numeric({1.0, zeta}).l1;
    CHECK(l1 >= prev - 1e-12);
    prev = l1;
  }
}

TEST_CASE("Pauli action and probabilities") {
  const PauliLambda lam{0.8, 0.3, 0.4};
  const PauliProbs p = lambda_probs(lam);
  CHECK(p.p0 + p.p1 + p.p2 + p.p3 == doctest::Approx(1.0));
  const PauliLambda back = probs_lambda(p);
  CHECK(back.l1 == doctest::Approx(lam.l1));
  CHECK(back.l2 == doctest::Approx(lam.l2));
  CHECK(back.l3 == doctest::Approx(lam.l3));
  const PauliLambda c = compose(lam, PauliLambda{0.5, 0.5, 0.5});
  CHECK(c.l1 == doctest::Approx(0.4));
  CHECK(c.l2 == doctest::Approx(0.15));
  CHECK_THROWS_AS(lambda_probs(PauliLambda{1.0, 1.0, -1.0}), NotAChannelError);

  const QubitState s{0.7, 1.1};
  const DensityMatrix2 rho = apply_pauli(lam, s);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-15);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  const DensityMatrix2 id = apply_pauli(PauliLambda{}, s);
  CHECK((id * id - id).cwiseAbs().maxCoeff() < 1e-15);
  const Eigen::Matrix2cd op = apply_pauli(lam, Eigen::Matrix2cd(pure_state(s)));
  CHECK((op - rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("direct density matrix equals the Pauli form") {
  for (double zeta : {-1.0, 0.5}) {
    const PacketFrame f{1.0, zeta};
    const PauliLambda lam = lambda_numeric(f);
    const QubitState s{2.1, 0.8};
    CHECK((rho_direct(s, f) - apply_pauli(lam, s)).cwiseAbs().maxCoeff() < 1e-7);
    PauliLambda wrong = lam;
    wrong.l2 = -wrong.l2;
    CHECK((rho_direct(s, f) - apply_pauli(wrong, s)).cwiseAbs().maxCoeff() > 1e-3);
  }
}

TEST_CASE("channel identities") {
  const IdentityResiduals r = identity_residuals({0.5, -2.0});
  CHECK(r.r1 < 1e-10);
  CHECK(r.r2 < 1e-8);
}

TEST_CASE("series expansion") {
  CHECK_THROWS_AS(lambda12_series(2.0, 4, 10.0), RangeError);
  const double L = default_series_cutoff(5.0, 6);
  CHECK(L > 0.0);
  const Lambda12 s = lambda12_series(5.0, 40, L);
  const Lambda12 t = lambda12_truncated(5.0, L);
  CHECK(std::abs(s.l1 - t.l1) < 1e-9 * std::abs(t.l1));
  CHECK(std::abs(s.l2 - t.l2) < 1e-9 * std::abs(t.l2));
  CHECK(series_h(SeriesKind::kappa, 1e-9) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-7));
}
