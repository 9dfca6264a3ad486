#include "boostcap/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "boostcap/errors.hpp"

namespace boostcap {

namespace {

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

// Photons must satisfy k⁰² = |k|² to this relative accuracy.
constexpr double kNullTolerance = 1e-12;

}  // namespace

const LorentzMatrix& minkowski_metric() {
  static const LorentzMatrix eta = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

double metric_residual(const LorentzMatrix& L) {
  const LorentzMatrix& eta = minkowski_metric();
  return (L.transpose() * eta * L - eta).cwiseAbs().maxCoeff();
}

FourVector null_vector(double omega, double theta, double phi) {
  const double st = std::sin(theta);
  return omega * FourVector(1.0, st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

LorentzMatrix boost_z(double zeta) {
  require_finite(zeta, "boost_z");
  const double ch = std::cosh(zeta);
  const double sh = std::sinh(zeta);
  LorentzMatrix B = LorentzMatrix::Identity();
  B(0, 0) = ch;
  B(0, 3) = -sh;
  B(3, 0) = -sh;
  B(3, 3) = ch;
  return B;
}

LorentzMatrix rotation(Axis axis, double angle) {
  require_finite(angle, "rotation");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  LorentzMatrix R = LorentzMatrix::Identity();
  if (axis == Axis::z) {
    R(1, 1) = c;
    R(1, 2) = -s;
    R(2, 1) = s;
    R(2, 2) = c;
  } else {
    R(1, 1) = c;
    R(1, 3) = s;
    R(3, 1) = -s;
    R(3, 3) = c;
  }
  return R;
}

LorentzMatrix standard_boost(const FourVector& p) {
  if (!p.allFinite()) throw DomainError("standard_boost: non-finite momentum");
  const double omega = p(0);
  if (!(omega > 0.0)) throw DomainError("standard_boost: energy must be positive");
  const double spatial = p.tail<3>().norm();
  if (std::abs(spatial - omega) > kNullTolerance * omega)
    throw DomainError("standard_boost: momentum is not null");
  const double theta = std::acos(std::clamp(p(3) / spatial, -1.0, 1.0));
  const double phi = (p(1) == 0.0 && p(2) == 0.0) ? 0.0 : std::atan2(p(2), p(1));
  return rotation(Axis::z, phi) * rotation(Axis::y, theta) * boost_z(-std::log(omega));
}

LorentzMatrix e2_element(double wigner_angle, double a1, double a2) {
  const double h = 0.5 * (a1 * a1 + a2 * a2);
  LorentzMatrix T;
  T << 1.0 + h, a1, a2, -h,
       a1, 1.0, 0.0, -a1,
       a2, 0.0, 1.0, -a2,
       h, a1, a2, 1.0 - h;
  return T * rotation(Axis::z, wigner_angle);
}

LorentzMatrix little_group_matrix(const LorentzMatrix& Lambda, const FourVector& p) {
  const LorentzMatrix Lp = standard_boost(p);
  const FourVector q = Lambda * p;
  if (!q.allFinite() || !(q(0) > 0.0))
    throw SingularConfigurationError("little_group: transformed energy is not positive");
  // Λp is null up to rounding; rescale the spatial part so standard_boost's
  // null check sees the exact photon direction.
  FourVector qn = q;
  const double spatial = q.tail<3>().norm();
  if (!(spatial > 0.0)) throw SingularConfigurationError("little_group: degenerate momentum");
  qn.tail<3>() *= q(0) / spatial;
  return standard_boost(qn).inverse() * Lambda * Lp;
}

LittleGroupDecomposition little_group(const LorentzMatrix& Lambda, const FourVector& p) {
  const LorentzMatrix W = little_group_matrix(Lambda, p);
  LittleGroupDecomposition d;
  d.a1 = W(1, 0);
  d.a2 = W(2, 0);
  // T(a)⁻¹ = T(−a); what remains is the SO(2) factor.
  const LorentzMatrix R = e2_element(0.0, -d.a1, -d.a2) * W;
  d.wigner_angle = std::atan2(R(2, 1), R(1, 1));
  d.residual = (e2_element(d.wigner_angle, d.a1, d.a2) - W).cwiseAbs().maxCoeff();
  return d;
}

double z_boost_translation(double zeta, double omega, double theta) {
  const double sh = std::sinh(zeta);
  return sh * std::sin(theta) / (omega * (std::cosh(zeta) - sh * std::cos(theta)));
}

double aberrated_angle(double theta, double zeta) {
  require_finite(theta, "aberrated_angle");
  require_finite(zeta, "aberrated_angle");
  if (theta < 0.0 || theta > std::numbers::pi)
    throw DomainError("aberrated_angle: polar angle outside [0, pi]");
  return std::atan2(std::sin(theta), std::sinh(zeta) + std::cosh(zeta) * std::cos(theta));
}

}  // namespace boostcap
