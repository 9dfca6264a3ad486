#include <cmath>
#include <sstream>

#include "boostcap/capacity.hpp"
#include "boostcap/errors.hpp"

namespace boostcap {

namespace {

CapacityReport report_at(double gamma, double zeta, const SolverConfig& cfg) {
  return capacity_report(lambda_numeric(PacketFrame::make(gamma, zeta), cfg.quadrature));
}

}  // namespace

BoostThreshold boost_threshold(double gamma, const SolverConfig& cfg) {
  auto hashing = [&](double zeta) { return report_at(gamma, zeta, cfg).hashing_raw; };

  BoostThreshold out;
  double zeta = 0.0;
  double h = hashing(zeta);
  out.scan_zeta.push_back(zeta);
  out.scan_hashing.push_back(h);
  if (h > 0.0) {
    std::ostringstream msg;
    msg << "boost_threshold: hashing bound already positive at zeta = 0 (" << h << ")";
    throw PreconditionError(msg.str());
  }
  while (h <= 0.0) {
    const double next = zeta - kZetaScanStep;
    if (next < kZetaScanMin - 1e-12)
      throw NotFoundError("boost_threshold: no sign change of the hashing bound for zeta in [-10, 0]");
    const double hn = hashing(next);
    if (hn < h - 1e-9)
      throw IntegrityError("boost_threshold: hashing bound is not monotone along the scan");
    zeta = next;
    h = hn;
    out.scan_zeta.push_back(zeta);
    out.scan_hashing.push_back(h);
  }

  // hashing(lo) > 0 ≥ hashing(hi)
  double lo = zeta;
  double hi = zeta + kZetaScanStep;
  while (hi - lo > cfg.zeta_tolerance) {
    const double mid = 0.5 * (lo + hi);
    (hashing(mid) > 0.0 ? lo : hi) = mid;
  }
  out.zeta = 0.5 * (lo + hi);
  return out;
}

GammaThreshold gamma_threshold(double zeta, const SolverConfig& cfg) {
  auto excess = [&](double inv_gamma) {
    return report_at(1.0 / inv_gamma, zeta, cfg).cerf - kCerfThreshold;
  };
  const double log_min = std::log(kInvGammaScanMin);
  const double log_max = std::log(kInvGammaScanMax);
  auto grid = [&](int i) {
    return std::exp(log_min + (log_max - log_min) * i / (kInvGammaScanPoints - 1));
  };

  GammaThreshold out;
  double x_prev = grid(0);
  double f_prev = excess(x_prev);
  for (int i = 1; i < kInvGammaScanPoints; ++i) {
    const double x = grid(i);
    const double f = excess(x);
    if ((f_prev >= 0.0) != (f >= 0.0)) {
      double lo = x_prev, hi = x;
      const bool lo_zero_capacity = f_prev >= 0.0;
      while (hi - lo > cfg.inv_gamma_rel_tol * lo) {
        const double mid = std::sqrt(lo * hi);
        ((excess(mid) >= 0.0) == lo_zero_capacity ? lo : hi) = mid;
      }
      out.crossings.push_back(std::sqrt(lo * hi));
    }
    x_prev = x;
    f_prev = f;
  }
  if (out.crossings.empty()) {
    std::ostringstream msg;
    msg << "gamma_threshold: Cerf indicator does not cross 1/2 for 1/gamma in [" << kInvGammaScanMin
        << ", " << kInvGammaScanMax << "] at zeta = " << zeta;
    throw NotFoundError(msg.str());
  }
  out.inv_gamma = out.crossings.front();
  return out;
}

}  // namespace boostcap
