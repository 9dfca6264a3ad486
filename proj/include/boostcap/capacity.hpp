#pragma once

#include <vector>

#include "boostcap/channel.hpp"

// Capacity functionals of Pauli channels, in bits per channel use.

namespace boostcap {

// 1 − H((1 + maxᵢ|λᵢ|)/2).
double classical_capacity(const PauliLambda& lam);

struct HashingBound {
  double raw = 0.0;      // 1 − H(p), may be negative
  double clamped = 0.0;  // max(0, raw)
};

HashingBound hashing_bound(const PauliProbs& p);

// p₁ + p₂ + p₃ + √(p₁p₂) + √(p₂p₃) + √(p₁p₃). At or above one half the
// quantum capacity is exactly zero.
double cerf_indicator(const PauliProbs& p);
inline constexpr double kCerfThreshold = 0.5;
bool cerf_zero_capacity(const PauliProbs& p);

// Choi matrix (1/2) Σ_{ij} |i⟩⟨j| ⊗ 𝒫(|i⟩⟨j|), basis order |i⟩ ⊗ |k⟩.
Eigen::Matrix4cd choi_matrix(const PauliLambda& lam);
// Smallest eigenvalue of the partial transpose (over the first factor).
double choi_pt_min_eigenvalue(const PauliLambda& lam);
// Positive partial transpose of the Choi matrix, tolerance 1e-10. For qubit
// channels this is equivalent to entanglement breaking.
bool is_entanglement_breaking(const PauliLambda& lam);

struct CapacityReport {
  PauliLambda lambda;
  PauliProbs probs;
  double classical = 0.0;
  double hashing_raw = 0.0;
  double hashing = 0.0;
  double cerf = 0.0;
  bool cerf_zero_capacity = false;
  bool entanglement_breaking = false;
};

// Throws IntegrityError if the report violates hashing ≤ classical or
// cerf_zero_capacity ⇒ hashing = 0.
CapacityReport capacity_report(const PauliLambda& lam);

// The composite of a depolarizing channel (c, c, c) with the one-Pauli
// channel p = (½, 0, ½, 0).
struct DepolarizedCompositeReport {
  double strength = 0.0;
  double hashing_p2 = 0.0;
  double cerf_p2 = 0.0;
  double cerf_composite = 0.0;
  bool passed = false;
};

DepolarizedCompositeReport depolarized_composite_check(double depolarizing_strength);

struct SolverConfig {
  QuadratureConfig quadrature = QuadratureConfig::sweep();
  double zeta_tolerance = 1e-4;     // absolute, boost_threshold
  double inv_gamma_rel_tol = 1e-4;  // relative, gamma_threshold
};

struct BoostThreshold {
  double zeta = 0.0;                 // ζ* where hashing_raw changes sign
  std::vector<double> scan_zeta;     // bracketing samples, ζ = 0, −0.25, ...
  std::vector<double> scan_hashing;  // hashing_raw at those samples
};

// Largest ζ* ∈ [−10, 0) with hashing_raw(ζ*) = 0 at fixed Γ. Throws
// PreconditionError if hashing_raw(ζ = 0) > 0, NotFoundError if no sign
// change occurs down to ζ = −10, IntegrityError if the scan is not
// monotone up to the bracket.
BoostThreshold boost_threshold(double gamma, const SolverConfig& cfg = {});

struct GammaThreshold {
  double inv_gamma = 0.0;          // first crossing (smallest 1/Γ)
  std::vector<double> crossings;   // every crossing found by the scan
};

// 1/Γ* ∈ [1e-4, 2] with cerf(1/Γ*) = ½ at fixed ζ. Throws NotFoundError if
// the scan sees no crossing.
GammaThreshold gamma_threshold(double zeta, const SolverConfig& cfg = {});

inline constexpr double kInvGammaScanMin = 1e-4;
inline constexpr double kInvGammaScanMax = 2.0;
inline constexpr int kInvGammaScanPoints = 41;
inline constexpr double kZetaScanStep = 0.25;
inline constexpr double kZetaScanMin = -10.0;

}  // namespace boostcap
