#include "boostcap/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "boostcap/errors.hpp"
#include "boostcap/special_functions.hpp"

namespace boostcap {

double classical_capacity(const PauliLambda& lam) {
  const double m = std::max({std::abs(lam.l1), std::abs(lam.l2), std::abs(lam.l3)});
  const double x = 0.5 * (1.0 + std::min(m, 1.0));
  return 1.0 - sf::binary_entropy_bits(x);
}

HashingBound hashing_bound(const PauliProbs& p) {
  const std::array<double, 4> v{p.p0, p.p1, p.p2, p.p3};
  const double raw = 1.0 - sf::entropy_bits(v);
  return {raw, std::max(0.0, raw)};
}

double cerf_indicator(const PauliProbs& p) {
  const double a = std::max(p.p1, 0.0);
  const double b = std::max(p.p2, 0.0);
  const double c = std::max(p.p3, 0.0);
  return a + b + c + std::sqrt(a * b) + std::sqrt(b * c) + std::sqrt(a * c);
}

bool cerf_zero_capacity(const PauliProbs& p) { return cerf_indicator(p) >= kCerfThreshold; }

Eigen::Matrix4cd choi_matrix(const PauliLambda& lam) {
  Eigen::Matrix4cd J = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
      e(i, j) = 1.0;
      J.block<2, 2>(2 * i, 2 * j) = 0.5 * apply_pauli(lam, e);
    }
  }
  return J;
}

double choi_pt_min_eigenvalue(const PauliLambda& lam) {
  const Eigen::Matrix4cd J = choi_matrix(lam);
  Eigen::Matrix4cd pt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) pt.block<2, 2>(2 * i, 2 * j) = J.block<2, 2>(2 * j, 2 * i);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_entanglement_breaking(const PauliLambda& lam) {
  return choi_pt_min_eigenvalue(lam) >= -1e-10;
}

CapacityReport capacity_report(const PauliLambda& lam) {
  CapacityReport r;
  r.lambda = lam;
  r.probs = lambda_probs(lam);
  r.classical = classical_capacity(lam);
  const HashingBound h = hashing_bound(r.probs);
  r.hashing_raw = h.raw;
  r.hashing = h.clamped;
  r.cerf = cerf_indicator(r.probs);
  r.cerf_zero_capacity = r.cerf >= kCerfThreshold;
  r.entanglement_breaking = is_entanglement_breaking(lam);
  if (r.hashing > r.classical + 1e-12)
    throw IntegrityError("capacity_report: hashing bound exceeds classical capacity");
  if (r.cerf_zero_capacity && r.hashing > 0.0)
    throw IntegrityError("capacity_report: positive hashing bound on a zero-capacity channel");
  return r;
}

DepolarizedCompositeReport depolarized_composite_check(double c) {
  if (!std::isfinite(c) || c < 0.0 || c > 1.0)
    throw DomainError("depolarized_composite_check: depolarizing strength outside [0, 1]");
  const PauliProbs p2{0.5, 0.0, 0.5, 0.0};
  const PauliLambda composite = compose(PauliLambda{c, c, c}, probs_lambda(p2));
  DepolarizedCompositeReport r;
  r.strength = c;
  r.hashing_p2 = hashing_bound(p2).clamped;
  r.cerf_p2 = cerf_indicator(p2);
  r.cerf_composite = cerf_indicator(lambda_probs(composite));
  r.passed = r.hashing_p2 == 0.0 && r.cerf_p2 == 0.5 && r.cerf_composite >= kCerfThreshold;
  return r;
}

}  // namespace boostcap
