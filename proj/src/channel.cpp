#include "boostcap/channel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "boostcap/errors.hpp"
#include "boostcap/special_functions.hpp"

namespace boostcap {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Trig {
  double cos_t, cos2_t, sin2_t;
  double cos2_p, sin2_p, cos_2p, sin2_2p;
  double a, b;
};

Trig trig(double theta, double phi) {
  Trig t;
  t.cos_t = std::cos(theta);
  const double st = std::sin(theta);
  t.cos2_t = t.cos_t * t.cos_t;
  t.sin2_t = st * st;
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  t.cos2_p = cp * cp;
  t.sin2_p = sp * sp;
  t.cos_2p = t.cos2_p - t.sin2_p;
  const double s2p = 2.0 * sp * cp;
  t.sin2_2p = s2p * s2p;
  // 1 − cos²φ sin²θ and 1 − sin²φ sin²θ without cancellation.
  t.a = t.cos2_p * t.cos2_t + t.sin2_p;
  t.b = t.sin2_p * t.cos2_t + t.cos2_p;
  return t;
}

GValues g_from(const Trig& t) {
  GValues v;
  v.g[0] = 0.5 * (t.cos2_p * t.cos2_t + t.sin2_p);
  v.g[1] = 0.5 * (t.cos2_p * t.cos_2p * t.cos2_t - t.cos_2p * t.sin2_p + t.cos_t * t.sin2_2p);
  v.g[2] = 0.5 * (t.sin2_p * t.cos2_t + t.cos2_p);
  v.g[3] = 0.5 * (t.sin2_p * t.cos_2p * t.cos2_t - t.cos_2p * t.cos2_p - t.cos_t * t.sin2_2p);
  v.g[4] = 0.25 * (2.0 * t.cos_2p * t.cos_2p * t.cos_t + t.sin2_2p + t.cos2_t * t.sin2_2p);
  v.g[5] = -0.5 * t.cos_t;
  return v;
}

// ∫₀^{θ_c} K(θ) · 4∫₀^{π/2} f(θ, φ) dφ dθ for a vector integrand f.
// The φ-integral is resolved to a tenth of the outer tolerance.
template <std::size_t Dim, class F>
QuadratureResult<Dim> integrate_sphere(const PacketFrame& frame, const QuadratureConfig& cfg,
                                       F f) {
  cfg.validate();
  const KernelEvaluator kernel(frame);
  QuadratureConfig inner = cfg;
  inner.rel_tol = 0.1 * cfg.rel_tol;
  inner.abs_tol = std::max(cfg.abs_tol, 0.1 * cfg.rel_tol);
  const std::array<double, 3> phi_pts{0.0, 0.25 * std::numbers::pi, kHalfPi};

  auto outer = [&](double theta) {
    std::array<double, Dim> out{};
    const double k = kernel.value(theta);
    if (k == 0.0) return out;
    auto in = [&](double phi) { return f(trig(theta, phi)); };
    const auto r = integrate<Dim>(in, phi_pts, inner);
    for (std::size_t i = 0; i < Dim; ++i) out[i] = 4.0 * k * r.value[i];
    return out;
  };
  const std::vector<double> pts = theta_breakpoints(frame);
  return integrate<Dim>(outer, pts, cfg);
}

}  // namespace

GValues g_funcs(double theta, double phi) { return g_from(trig(theta, phi)); }

Eigen::Vector3d bloch_vector(const QubitState& s) {
  const double sx = std::sin(s.xi);
  return {std::sin(s.chi) * sx, std::cos(s.xi), std::cos(s.chi) * sx};
}

DensityMatrix2 pure_state(const QubitState& s) { return apply_pauli(PauliLambda{}, s); }

LambdaResult lambda_integrals(const PacketFrame& frame, const QuadratureConfig& cfg) {
  const PacketFrame f = PacketFrame::make(frame.gamma, frame.zeta);
  auto integrand = [](const Trig& t) {
    const GValues v = g_from(t);
    const double root = std::sqrt(t.a * t.b);
    return std::array<double, 4>{1.0, v.g[4] / root, v.g[5] / root, v.g[1] / t.a};
  };
  const auto r = integrate_sphere<4>(f, cfg, integrand);
  LambdaResult out;
  out.normalization = r.value[0];
  out.lambda = {2.0 * r.value[1] / r.value[0], -2.0 * r.value[2] / r.value[0],
                2.0 * r.value[3] / r.value[0]};
  out.error = r.error;
  return out;
}

PauliLambda lambda_numeric(const PacketFrame& frame, const QuadratureConfig& cfg) {
  const PauliLambda lam = lambda_integrals(frame, cfg).lambda;
  for (double l : {lam.l1, lam.l2, lam.l3})
    if (!(std::abs(l) <= 1.0 + kSimplexTolerance))
      throw IntegrityError("lambda_numeric: eigenvalue outside [-1, 1]");
  lambda_probs(lam);
  return lam;
}

IdentityResiduals identity_residuals(const PacketFrame& frame, const QuadratureConfig& cfg) {
  const PacketFrame f = PacketFrame::make(frame.gamma, frame.zeta);
  auto side = [&](int g_index, bool over_a) {
    auto integrand = [=](const Trig& t) {
      const GValues v = g_from(t);
      return std::array<double, 1>{v.g[g_index] / (over_a ? t.a : t.b)};
    };
    return integrate_sphere<1>(f, cfg, integrand).value[0];
  };
  const double n = normalization(f, NormalizationMethod::closed_form);
  IdentityResiduals r;
  r.r1 = std::abs(side(0, true) - side(2, false)) / n;
  r.r2 = std::abs(side(1, true) + side(3, false)) / n;
  return r;
}

DensityMatrix2 rho_direct(const QubitState& state, const PacketFrame& frame,
                          const QuadratureConfig& cfg) {
  const PacketFrame f = PacketFrame::make(frame.gamma, frame.zeta);
  const double cz = std::cos(state.chi) * std::sin(state.xi);
  const double sx = std::sin(state.chi) * std::sin(state.xi);
  const double cx = std::cos(state.xi);
  auto integrand = [=](const Trig& t) {
    const GValues v = g_from(t);
    const double root = std::sqrt(t.a * t.b);
    return std::array<double, 5>{1.0, (v.g[0] + v.g[1] * cz) / t.a,
                                 (v.g[2] + v.g[3] * cz) / t.b, v.g[4] * sx / root,
                                 v.g[5] * cx / root};
  };
  const auto r = integrate_sphere<5>(f, cfg, integrand);
  const double n = r.value[0];
  const std::complex<double> off(r.value[3] / n, r.value[4] / n);
  DensityMatrix2 rho;
  rho << r.value[1] / n, off, std::conj(off), r.value[2] / n;
  return rho;
}

DensityMatrix2 apply_pauli(const PauliLambda& lam, const QubitState& state) {
  const Eigen::Vector3d r = bloch_vector(state);
  const std::complex<double> off(0.5 * lam.l1 * r(0), -0.5 * lam.l2 * r(1));
  DensityMatrix2 rho;
  rho << 0.5 * (1.0 + lam.l3 * r(2)), off, std::conj(off), 0.5 * (1.0 - lam.l3 * r(2));
  return rho;
}

Eigen::Matrix2cd apply_pauli(const PauliLambda& lam, const Eigen::Matrix2cd& op) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  Eigen::Matrix2cd X, Y, Z;
  X << 0.0, 1.0, 1.0, 0.0;
  Y << 0.0, -i, i, 0.0;
  Z << 1.0, 0.0, 0.0, -1.0;
  Eigen::Matrix2cd out = op.trace() * Eigen::Matrix2cd::Identity();
  out += lam.l1 * (X * op).trace() * X;
  out += lam.l2 * (Y * op).trace() * Y;
  out += lam.l3 * (Z * op).trace() * Z;
  return 0.5 * out;
}

PauliProbs lambda_probs(const PauliLambda& lam) {
  std::array<double, 4> p{(1.0 + lam.l1 + lam.l2 + lam.l3) / 4.0,
                          (1.0 + lam.l1 - lam.l2 - lam.l3) / 4.0,
                          (1.0 - lam.l1 + lam.l2 - lam.l3) / 4.0,
                          (1.0 - lam.l1 - lam.l2 + lam.l3) / 4.0};
  for (double& v : p) {
    if (!std::isfinite(v) || v < -kSimplexTolerance)
      throw NotAChannelError("lambda_probs: probability below zero, map is not a channel");
    if (v < 0.0) v = 0.0;
  }
  return {p[0], p[1], p[2], p[3]};
}

PauliLambda probs_lambda(const PauliProbs& p) {
  return {p.p0 + p.p1 - p.p2 - p.p3, p.p0 - p.p1 + p.p2 - p.p3, p.p0 - p.p1 - p.p2 + p.p3};
}

PauliLambda compose(const PauliLambda& a, const PauliLambda& b) {
  return {a.l1 * b.l1, a.l2 * b.l2, a.l3 * b.l3};
}

double lambda3_bracket(double p) {
  if (!std::isfinite(p) || p < kLambda3MinP || p > kLambda3MaxP)
    throw RangeError("lambda3_bracket: p outside the validated range");
  constexpr double pi = std::numbers::pi;
  constexpr double euler = std::numbers::egamma;
  const double rp = std::sqrt(p);
  const double hyp = 2.0 * p * p * sf::hyp2f2_11_52_3(p);
  const double rest = -pi * (2.0 * p - 1.0) * sf::erfi(rp) + 2.0 * std::sqrt(pi * p) * std::exp(p) -
                      std::log(p) + 2.0 * p * (euler - 3.0 + std::log(4.0 * p));
  return hyp + 3.0 * rest;
}

double lambda3_closed(double gamma) {
  if (!std::isfinite(gamma) || !(gamma > 0.0))
    throw DomainError("lambda3_closed: gamma must be positive");
  const double p = 1.0 / (gamma * gamma);
  const double n = normalization(PacketFrame::make(gamma, 0.0), NormalizationMethod::closed_form);
  const double limit = std::numbers::egamma + 1.0 + std::log(4.0);
  return 4.0 * std::numbers::pi / n * (lambda3_bracket(p) / 3.0 - limit);
}

}  // namespace boostcap
