#include "boostcap/quadrature.hpp"

namespace boostcap {

void QuadratureConfig::validate() const {
  if (!std::isfinite(abs_tol) || !std::isfinite(rel_tol) || abs_tol < 0.0 || rel_tol < 0.0 ||
      (abs_tol == 0.0 && rel_tol == 0.0))
    throw DomainError("QuadratureConfig: tolerances must be non-negative and not both zero");
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

}  // namespace boostcap
