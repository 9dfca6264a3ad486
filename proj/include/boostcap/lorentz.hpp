#pragma once

#include <Eigen/Dense>

// Minkowski-space algebra in natural units, signature (+, −, −, −).
// Components are ordered (k⁰, k¹, k², k³); the standard photon momentum is
// k_std = (1, 0, 0, 1).

namespace boostcap {

using FourVector = Eigen::Vector4d;
using LorentzMatrix = Eigen::Matrix4d;

enum class Axis { y, z };

const LorentzMatrix& minkowski_metric();

// max |ΛᵀηΛ − η| elementwise.
double metric_residual(const LorentzMatrix& L);

// Photon momentum ω(1, sinθ cosφ, sinθ sinφ, cosθ).
FourVector null_vector(double omega, double theta, double phi);

// Pure boost along z: (t, z) ↦ (ch·t − sh·z, −sh·t + ch·z).
LorentzMatrix boost_z(double zeta);

LorentzMatrix rotation(Axis axis, double angle);

// L_p = R_z(φ) R_y(θ) B_z(−ln ω), mapping k_std to p.
LorentzMatrix standard_boost(const FourVector& p);

// Little-group element built from a rotation about z followed by an
// E₂ translation: T(a₁, a₂)·R_z(angle).
LorentzMatrix e2_element(double wigner_angle, double a1, double a2);

struct LittleGroupDecomposition {
  double wigner_angle = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double residual = 0.0;  // max |T·R − W|
};

// W(Λ, p) = L_{Λp}⁻¹ Λ L_p and its factorization W = T(a)·R(ϑ).
LorentzMatrix little_group_matrix(const LorentzMatrix& Lambda, const FourVector& p);
LittleGroupDecomposition little_group(const LorentzMatrix& Lambda, const FourVector& p);

// Translation a₁ of W(boost_z(ζ), p) for p = ω(1, sinθ, 0, cosθ) rotated by
// any φ: e^ξ sinθ / (coth ζ − cos θ), written without the coth pole at ζ = 0.
double z_boost_translation(double zeta, double omega, double theta);

// Polar angle of a photon at polar angle θ seen from the frame boosted by
// boost_z(−ζ): atan2(sin θ, sinh ζ + cosh ζ cos θ). Continuous on [0, π]
// with 0 ↦ 0 and π ↦ π. The inverse map is aberrated_angle(·, −ζ).
double aberrated_angle(double theta, double zeta);

}  // namespace boostcap
