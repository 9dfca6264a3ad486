#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "boostcap/quadrature.hpp"
#include "boostcap/wavepacket.hpp"

// The Pauli channel induced on helicity qubits by a boosted wave packet.
//
// With a = 1 − cos²φ sin²θ and b = 1 − sin²φ sin²θ the output density
// matrix of the input (χ, ξ) is
//
//   ρ₀₀ = (1/N) ∫∫ K (g₁ + g₂ cosχ sinξ) / a
//   ρ₁₁ = (1/N) ∫∫ K (g₃ + g₄ cosχ sinξ) / b
//   ρ₀₁ = (1/N) ∫∫ K (g₅ sinχ sinξ + i g₆ cosξ) / √(ab)
//
// over φ ∈ [0, 2π), θ ∈ [0, θ_c), N being the same integral of K alone.
// Matching against the Pauli form ½(I + λ₁r₁X + λ₂r₂Y + λ₃r₃Z) with
// r = (sinχ sinξ, cosξ, cosχ sinξ) gives
//
//   λ₁ = (2/N) ∫∫ K g₅/√(ab),  λ₂ = −(2/N) ∫∫ K g₆/√(ab),  λ₃ = (2/N) ∫∫ K g₂/a.
//
// The minus sign on λ₂ is what makes Γ → 0 the identity channel
// (g₆ = −cosθ/2 < 0 near θ = 0).
//
// Every φ-integrand is invariant under φ ↦ −φ and φ ↦ π − φ, so the
// φ-integrals are evaluated as 4 ∫₀^{π/2}.

namespace boostcap {

struct PauliLambda {
  double l1 = 1.0;
  double l2 = 1.0;
  double l3 = 1.0;
};

struct PauliProbs {
  double p0 = 1.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

struct QubitState {
  double chi = 0.0;
  double xi = 0.0;
};

using DensityMatrix2 = Eigen::Matrix2cd;

struct GValues {
  std::array<double, 6> g{};  // g[0] = g₁, ..., g[5] = g₆
};

GValues g_funcs(double theta, double phi);

// Bloch vector (sinχ sinξ, cosξ, cosχ sinξ) of the input state.
Eigen::Vector3d bloch_vector(const QubitState& state);
// ½(I + r·σ) for the Bloch vector above; the input as seen by the channel.
DensityMatrix2 pure_state(const QubitState& state);

// λ from the channel integrals, together with the normalization used.
struct LambdaResult {
  PauliLambda lambda;
  double normalization = 0.0;
  std::array<double, 4> error{};  // quadrature bounds for N, ∫Kg₅, ∫Kg₆, ∫Kg₂
};

LambdaResult lambda_integrals(const PacketFrame& frame, const QuadratureConfig& cfg);

// Throws IntegrityError if the implied probabilities leave the simplex by
// more than 1e-9.
PauliLambda lambda_numeric(const PacketFrame& frame,
                           const QuadratureConfig& cfg = QuadratureConfig::verification());

struct IdentityResiduals {
  double r1 = 0.0;  // |∫∫K g₁/a − ∫∫K g₃/b| / N
  double r2 = 0.0;  // |∫∫K g₂/a + ∫∫K g₄/b| / N
};

// Each side is an independent 2D quadrature.
IdentityResiduals identity_residuals(const PacketFrame& frame,
                                     const QuadratureConfig& cfg = QuadratureConfig::verification());

DensityMatrix2 rho_direct(const QubitState& state, const PacketFrame& frame,
                          const QuadratureConfig& cfg = QuadratureConfig::verification());

DensityMatrix2 apply_pauli(const PauliLambda& lam, const QubitState& state);
// Action on an arbitrary 2×2 operator: ½(tr A·I + Σ λᵢ tr(σᵢA) σᵢ).
Eigen::Matrix2cd apply_pauli(const PauliLambda& lam, const Eigen::Matrix2cd& op);

// Throws NotAChannelError if a component is below −1e-9; components in
// [−1e-9, 0) are clamped to 0.
PauliProbs lambda_probs(const PauliLambda& lam);
PauliLambda probs_lambda(const PauliProbs& p);

PauliLambda compose(const PauliLambda& a, const PauliLambda& b);

// λ₃ at ζ = 0 in closed form. With p = 1/Γ²,
//   λ₃ = (4π/N) [B(p)/3 − (γ_E + 1 + log 4)],
//   B(p) = 2p² ₂F₂(1,1;5/2,3;p)
//          + 3(−π(2p − 1) erfi(√p) + 2√(πp) eᵖ − log p + 2p(γ_E − 3 + log 4p)).
// B/3 → γ_E + 1 + log 4 as p → ∞. Valid for p ∈ [kLambda3MinP, kLambda3MaxP];
// above that the eᵖ-sized terms cancel catastrophically.
inline constexpr double kLambda3MinP = 1e-6;
inline constexpr double kLambda3MaxP = 6.25;

double lambda3_bracket(double p);
double lambda3_closed(double gamma);

// Small-Γ⁻² expansion of λ₁, λ₂ at ζ = 0 in the variable s = tan²θ:
//   λ₁ = (2/N) ∫₀^∞ e^{−s/Γ²} h₁(s) ds,   λ₂ = (2/N) ∫₀^∞ e^{−s/Γ²} h₂(s) ds,
//   h₁ = q₁E[m₁] + q₂K[m₁] + q₃E[m₂] + q₄K[m₂],
//   h₂ = ½(K[m₁]/√(1+s) + 2K[m₂]/(2+s)),
// m₁ = −s²/(4(1+s)), m₂ = s²/(2+s)². The two terms of h₂ are equal
// (imaginary-modulus transformation), so h₂ = K[m₁]/√(1+s).
// κₙ, ιₙ are the moments (−1)ⁿ/n! ∫₀^L sⁿ h(s) ds.
enum class SeriesKind { kappa, iota };

double series_h(SeriesKind kind, double s);
double series_coeff(SeriesKind kind, int n, double L,
                    const QuadratureConfig& cfg = QuadratureConfig::verification());

struct Lambda12 {
  double l1 = 0.0;
  double l2 = 0.0;
};

// Σ_{n ≤ n_max} Γ^{−2n}(2/N)(κₙ, ιₙ). Throws RangeError for Γ < 3.
Lambda12 lambda12_series(double gamma, int n_max, double L,
                         const QuadratureConfig& cfg = QuadratureConfig::verification());

// (2/N) ∫₀^L e^{−s/Γ²} h ds: the function the partial sums converge to.
Lambda12 lambda12_truncated(double gamma, double L,
                            const QuadratureConfig& cfg = QuadratureConfig::verification());

// Modelled absolute error of the n_max-term series on [0, L]: the dropped
// tail ∫_L^∞ e^{−s/Γ²}h plus the exponential remainder ∫₀^L (s/Γ²)^{n+1}/(n+1)! h,
// with h ≈ (π/2)/√(1+s).
double series_error_model(double gamma, int n_max, double L);
// L minimizing series_error_model. h decays only like s^{−1/2}, so the two
// terms cannot both be small; the minimum is of order 1e-2 relative at Γ = 5.
double default_series_cutoff(double gamma, int n_max);

inline constexpr double kSimplexTolerance = 1e-9;

}  // namespace boostcap
