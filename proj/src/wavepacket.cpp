#include "boostcap/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "boostcap/errors.hpp"
#include "boostcap/lorentz.hpp"
#include "boostcap/special_functions.hpp"

namespace boostcap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

PacketFrame PacketFrame::make(double gamma, double zeta) {
  if (!std::isfinite(gamma) || !std::isfinite(zeta))
    throw DomainError("PacketFrame: non-finite parameter");
  if (!(gamma > 0.0)) throw DomainError("PacketFrame: gamma must be positive");
  return {gamma, zeta};
}

double theta_c(double zeta) {
  if (!std::isfinite(zeta)) throw DomainError("theta_c: non-finite rapidity");
  return std::acos(-std::tanh(zeta));
}

KernelEvaluator::KernelEvaluator(const PacketFrame& frame)
    : frame_(PacketFrame::make(frame.gamma, frame.zeta)),
      sinh_(std::sinh(frame.zeta)),
      cosh_(std::cosh(frame.zeta)),
      inv_gamma_sq_(1.0 / (frame.gamma * frame.gamma)),
      theta_c_(boostcap::theta_c(frame.zeta)) {}

double KernelEvaluator::denominator(double theta) const {
  return sinh_ + cosh_ * std::cos(theta);
}

double KernelEvaluator::log_envelope(double theta) const {
  const double d = denominator(theta);
  if (!(d > 0.0)) return kNegInf;
  const double t = std::sin(theta) / d;
  return -t * t * inv_gamma_sq_ - std::log(d);
}

double KernelEvaluator::log_value(double theta) const {
  const double d = denominator(theta);
  const double s = std::sin(theta);
  if (!(d > 0.0) || !(s > 0.0)) return kNegInf;
  const double t = s / d;
  return -t * t * inv_gamma_sq_ + std::log(s) - 2.0 * std::log(d);
}

double KernelEvaluator::value(double theta) const {
  const double l = log_value(theta);
  return l == kNegInf ? 0.0 : std::exp(l);
}

namespace {

void require_in_domain(double theta, const KernelEvaluator& k) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > k.theta_c())
    throw DomainError("kernel: polar angle outside [0, theta_c]");
}

}  // namespace

double kernel(double theta, const PacketFrame& frame) {
  const KernelEvaluator k(frame);
  require_in_domain(theta, k);
  return k.value(theta);
}

double log_kernel(double theta, const PacketFrame& frame) {
  const KernelEvaluator k(frame);
  require_in_domain(theta, k);
  return k.log_value(theta);
}

double log_envelope_sq(double theta, const PacketFrame& frame) {
  const KernelEvaluator k(frame);
  require_in_domain(theta, k);
  return k.log_envelope(theta) -
         std::log(normalization(frame, NormalizationMethod::closed_form));
}

double envelope_sq(double theta, const PacketFrame& frame) {
  const double l = log_envelope_sq(theta, frame);
  return l == kNegInf ? 0.0 : std::exp(l);
}

std::vector<double> theta_breakpoints(const PacketFrame& frame) {
  const double tc = theta_c(frame.zeta);
  std::vector<double> pts{0.0, tc};
  for (int k = -4; k <= 3; ++k) {
    const double rest = std::atan(frame.gamma * std::ldexp(1.0, k));
    const double theta = aberrated_angle(rest, -frame.zeta);
    if (theta > 0.0 && theta < tc) pts.push_back(theta);
  }
  const double half_pi = 0.5 * std::numbers::pi;
  if (half_pi < tc) pts.push_back(half_pi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double normalization(const PacketFrame& frame, NormalizationMethod method,
                     const QuadratureConfig& cfg) {
  const PacketFrame f = PacketFrame::make(frame.gamma, frame.zeta);
  if (method == NormalizationMethod::closed_form)
    return f.gamma * std::pow(std::numbers::pi, 1.5) * sf::erfcx(1.0 / f.gamma);
  const KernelEvaluator k(f);
  const std::vector<double> pts = theta_breakpoints(f);
  const auto r = integrate_scalar([&k](double t) { return k.value(t); }, pts, cfg);
  return 2.0 * std::numbers::pi * r.value[0];
}

double rest_frame_trace(double gamma, const QuadratureConfig& cfg) {
  if (!std::isfinite(gamma) || !(gamma > 0.0))
    throw DomainError("rest_frame_trace: gamma must be positive");
  const double g2 = gamma * gamma;
  auto integrand = [g2](double t) {
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    const double s = g2 * t / u;
    return std::exp(-t / u) * g2 / (u * u) / (2.0 * std::sqrt(1.0 + s));
  };
  const std::vector<double> pts{0.0, 0.125, 0.25, 0.5, 0.75, 1.0};
  return integrate_scalar(integrand, pts, cfg).value[0];
}

}  // namespace boostcap
