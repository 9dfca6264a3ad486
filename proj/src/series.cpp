#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "boostcap/channel.hpp"
#include "boostcap/errors.hpp"
#include "boostcap/special_functions.hpp"

namespace boostcap {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this s the q-polynomials are combined analytically.
constexpr double kStableSwitch = 1.0;

struct Q {
  double q1, q2, q3, q4;
};

Q q_polys(double s) {
  const double r = std::sqrt(1.0 + s);
  const double s2 = s * s;
  const double s1 = s + 1.0;
  return {-2.0 * r / s2 + 2.0 / (s2 * s1) + 3.0 / (s * s1) + 1.0 / s1,
          2.0 / (s2 * r) - 2.0 / (s2 * s1) + 2.0 / (s * r) + 0.5 / r - 3.0 / (s * s1) - 1.0 / s1,
          -2.0 / s2 + 2.0 / (s2 * r) - 1.0 / s + 2.0 / (s * r) + 0.5 / r,
          2.0 / s2 - 2.0 / (s2 * r) + 1.0 / s - 2.0 / (s * r)};
}

// Parameters of the two elliptic arguments and their complements 1 − m.
struct Moduli {
  double m1, mc1, m2, mc2;
};

Moduli moduli(double s) {
  const double t = 2.0 + s;
  return {-s * s / (4.0 * (1.0 + s)), 1.0 + s * s / (4.0 * (1.0 + s)), s * s / (t * t),
          4.0 * (1.0 + s) / (t * t)};
}

// K and E minus their first two Maclaurin terms, (π/2)(1 ± m/4).
struct EllipticTail {
  double k2, e2;
};

EllipticTail elliptic_tail(double m, double mc) {
  if (std::abs(m) <= 0.5) {
    // c_n = ((2n−1)!!/(2n)!!)²; K = (π/2)Σ c_n mⁿ, E = (π/2)Σ c_n mⁿ/(1 − 2n).
    double c = 0.25;
    double mn = m;
    double k = 0.0, e = 0.0;
    for (int n = 2; n < 200; ++n) {
      const double ratio = (2.0 * n - 1.0) / (2.0 * n);
      c *= ratio * ratio;
      mn *= m;
      const double term = c * mn;
      k += term;
      e += term / (1.0 - 2.0 * n);
      if (std::abs(term) < 1e-18) break;
    }
    return {0.5 * kPi * k, 0.5 * kPi * e};
  }
  const sf::EllipticPair p = sf::elliptic_from_complement(mc);
  return {p.K - 0.5 * kPi * (1.0 + 0.25 * m), p.E - 0.5 * kPi * (1.0 - 0.25 * m)};
}

double h1_naive(double s) {
  const Q q = q_polys(s);
  const Moduli m = moduli(s);
  const sf::EllipticPair a = sf::elliptic_from_complement(m.mc1);
  const sf::EllipticPair b = sf::elliptic_from_complement(m.mc2);
  return q.q1 * a.E + q.q2 * a.K + q.q3 * b.E + q.q4 * b.K;
}

// Same combination with the 1/s² and 1/s parts of the q's cancelled by hand:
//   Σq = 1/√(1+s),
//   h₁ = (π/2)Σq + (π/8)[m₁(q₂−q₁) + m₂(q₄−q₃)] + Σ qᵢ·(tail of K or E).
double h1_stable(double s) {
  const double r = std::sqrt(1.0 + s);
  const double s1 = 1.0 + s;
  const double s2 = s * s;
  const Q q = q_polys(s);
  const Moduli m = moduli(s);
  const double m1_diff =
      -(2.0 / r - 4.0 / s1 + 2.0 * s / r + s2 / (2.0 * r) - 6.0 * s / s1 - 2.0 * s2 / s1 + 2.0 * r) /
      (4.0 * s1);
  const double m2_diff =
      (4.0 - 4.0 / r + 2.0 * s - 4.0 * s / r - s2 / (2.0 * r)) / ((2.0 + s) * (2.0 + s));
  const EllipticTail t1 = elliptic_tail(m.m1, m.mc1);
  const EllipticTail t2 = elliptic_tail(m.m2, m.mc2);
  return 0.5 * kPi / r + 0.125 * kPi * (m1_diff + m2_diff) + q.q1 * t1.e2 + q.q2 * t1.k2 +
         q.q3 * t2.e2 + q.q4 * t2.k2;
}

double h2(double s) {
  const Moduli m = moduli(s);
  const double a = sf::elliptic_from_complement(m.mc1).K / std::sqrt(1.0 + s);
  const double b = sf::elliptic_from_complement(m.mc2).K / (2.0 + s);
  return 0.5 * (a + 2.0 * b);
}

// The q's are individually O(1/s²); their combination must stay near its
// limit π/2. A failure here means the coefficients or the moduli are wrong.
void check_pole_cancellation() {
  const double probe = 0.25;
  const double stable = h1_stable(probe);
  const double naive = h1_naive(probe);
  if (!(std::abs(stable - naive) <= 1e-12 * std::abs(naive)))
    throw IntegrityError("series: stable and direct h1 disagree");
  if (!(std::abs(h1_stable(1e-8) - 0.5 * kPi) < 1e-7))
    throw IntegrityError("series: q-polynomial poles do not cancel at s = 0");
}

std::vector<double> s_breakpoints(double L) {
  std::vector<double> pts{0.0};
  for (double x = 0.25; x < L; x *= 2.0) pts.push_back(x);
  pts.push_back(L);
  return pts;
}

double normalization_at(double gamma) {
  return normalization(PacketFrame::make(gamma, 0.0), NormalizationMethod::closed_form);
}

}  // namespace

double series_h(SeriesKind kind, double s) {
  if (!std::isfinite(s) || s < 0.0) throw DomainError("series_h: s must be non-negative");
  if (kind == SeriesKind::iota) return h2(s);
  if (s == 0.0) return 0.5 * kPi;
  return s < kStableSwitch ? h1_stable(s) : h1_naive(s);
}

double series_coeff(SeriesKind kind, int n, double L, const QuadratureConfig& cfg) {
  if (n < 0) throw DomainError("series_coeff: n must be non-negative");
  if (!std::isfinite(L) || !(L > 0.0)) throw DomainError("series_coeff: L must be positive");
  if (kind == SeriesKind::kappa) check_pole_cancellation();
  auto f = [&](double s) { return std::pow(s, n) * series_h(kind, s); };
  const double moment = integrate_scalar(f, s_breakpoints(L), cfg).value[0];
  return ((n % 2 == 0) ? 1.0 : -1.0) * moment / std::tgamma(n + 1.0);
}

Lambda12 lambda12_series(double gamma, int n_max, double L, const QuadratureConfig& cfg) {
  if (!std::isfinite(gamma) || gamma < 3.0)
    throw RangeError("lambda12_series: expansion is only validated for gamma >= 3");
  if (n_max < 0) throw DomainError("lambda12_series: n_max must be non-negative");
  const double inv_g2 = 1.0 / (gamma * gamma);
  Lambda12 out;
  double weight = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    out.l1 += weight * series_coeff(SeriesKind::kappa, n, L, cfg);
    out.l2 += weight * series_coeff(SeriesKind::iota, n, L, cfg);
    weight *= inv_g2;
  }
  const double scale = 2.0 / normalization_at(gamma);
  out.l1 *= scale;
  out.l2 *= scale;
  return out;
}

Lambda12 lambda12_truncated(double gamma, double L, const QuadratureConfig& cfg) {
  if (!std::isfinite(L) || !(L > 0.0)) throw DomainError("lambda12_truncated: L must be positive");
  const double p = 1.0 / (gamma * gamma);
  auto f = [&](double s) {
    const double w = std::exp(-p * s);
    return std::array<double, 2>{w * series_h(SeriesKind::kappa, s),
                                 w * series_h(SeriesKind::iota, s)};
  };
  const auto r = integrate<2>(f, s_breakpoints(L), cfg);
  const double scale = 2.0 / normalization_at(gamma);
  return {scale * r.value[0], scale * r.value[1]};
}

double series_error_model(double gamma, int n_max, double L) {
  // h ≈ (π/2)/√(1+s): exact at s = 0 and within a few percent for s ≳ 1.
  const double p = 1.0 / (gamma * gamma);
  const QuadratureConfig cfg{0.0, 1e-8, 2000};
  auto model = [](double s) { return 0.5 * kPi / std::sqrt(1.0 + s); };
  const double k = n_max + 1.0;
  const double log_fact = std::lgamma(k + 1.0);
  auto remainder = [&](double s) {
    return s > 0.0 ? std::exp(k * std::log(p * s) - log_fact) * model(s) : 0.0;
  };
  auto tail = [&](double s) { return std::exp(-p * (s - L)) * model(s); };
  const std::array<double, 2> inner{0.0, L};
  const std::array<double, 4> outer{L, L + 1.0 / p, L + 8.0 / p, L + 60.0 / p};
  return integrate_scalar(remainder, inner, cfg).value[0] +
         std::exp(-p * L) * integrate_scalar(tail, outer, cfg).value[0];
}

double default_series_cutoff(double gamma, int n_max) {
  if (!std::isfinite(gamma) || !(gamma > 0.0))
    throw DomainError("default_series_cutoff: gamma must be positive");
  if (n_max < 0) throw DomainError("default_series_cutoff: n_max must be non-negative");
  // Log-grid minimum of the model error over L = Γ²x, x ∈ [0.05, 50].
  const double g2 = gamma * gamma;
  double best_x = 0.05;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 240; ++i) {
    const double x = 0.05 * std::pow(1000.0, i / 240.0);
    const double e = series_error_model(gamma, n_max, g2 * x);
    if (e < best) {
      best = e;
      best_x = x;
    }
  }
  return g2 * best_x;
}

}  // namespace boostcap
