#pragma once

#include <vector>

#include "boostcap/quadrature.hpp"

// Boosted photon envelope in the σ_z → 0 limit. Everything is expressed per
// unit of the constant k_p/(2π)³, which cancels in every channel quantity.
//
// With D(θ) = sinh ζ + cosh ζ cos θ the integration kernel is
//
//     K(θ; ζ, Γ) = exp(−sin²θ / (Γ² D²)) · sin θ / D²,   0 ≤ θ < θ_c,
//
// θ_c = arccos(−tanh ζ) being where D vanishes. In terms of the rest-frame
// angle, tan θ̃ = sin θ / D, K dθ = exp(−tan²θ̃/Γ²) sin θ̃ d(tan θ̃), which is
// why the normalization does not depend on ζ:
//
//     N(Γ) = ∫₀^{2π}∫₀^{θ_c} K dθ dφ = Γ π^{3/2} erfcx(1/Γ).

namespace boostcap {

struct PacketFrame {
  double gamma = 1.0;  // spread σ/k_p
  double zeta = 0.0;   // rapidity

  // Throws DomainError unless gamma > 0 and both fields are finite.
  static PacketFrame make(double gamma, double zeta);
};

double theta_c(double zeta);

// Precomputed evaluator for the kernel of one frame.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const PacketFrame& frame);

  // log K, −inf where K underflows or vanishes (θ = 0, θ ≥ θ_c).
  double log_value(double theta) const;
  double value(double theta) const;
  // log of the unnormalized envelope exp(−sin²θ/(Γ²D²)) / D.
  double log_envelope(double theta) const;

  double theta_c() const { return theta_c_; }
  const PacketFrame& frame() const { return frame_; }

 private:
  double denominator(double theta) const;

  PacketFrame frame_;
  double sinh_;
  double cosh_;
  double inv_gamma_sq_;
  double theta_c_;
};

// θ must lie in [0, θ_c]; K(θ_c) is reported as its limit 0.
double kernel(double theta, const PacketFrame& frame);
double log_kernel(double theta, const PacketFrame& frame);

// |f(Λ⁻¹k)|² = exp(−sin²θ/(Γ²D²)) / (N·D) with the closed-form N.
double envelope_sq(double theta, const PacketFrame& frame);
double log_envelope_sq(double theta, const PacketFrame& frame);

enum class NormalizationMethod { quadrature, closed_form };

double normalization(const PacketFrame& frame, NormalizationMethod method,
                     const QuadratureConfig& cfg = QuadratureConfig::verification());

// ∫₀^∞ exp(−s/Γ²) / (2√(1+s)) ds by 1D quadrature on s = Γ² t/(1 − t).
// Equals N(Γ)/(2π).
double rest_frame_trace(double gamma,
                        const QuadratureConfig& cfg = QuadratureConfig::verification());

// Panel boundaries for θ-integrals of the kernel: 0, the images of
// tan θ̃ = Γ·2^k (k = −4..3), π/2 when it lies inside, and θ_c.
std::vector<double> theta_breakpoints(const PacketFrame& frame);

}  // namespace boostcap
