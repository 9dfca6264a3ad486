#include "boostcap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "boostcap/errors.hpp"

namespace boostcap {

const char* axis_name(SweepAxis axis) {
  return axis == SweepAxis::inv_gamma ? "inv_gamma" : "zeta";
}

void SweepSpec::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(fixed))
    throw DomainError("sweep: non-finite range");
  if (!(start < stop)) throw DomainError("sweep: start must be below stop");
  if (steps < 2) throw DomainError("sweep: steps must be at least 2");
  if (axis == SweepAxis::inv_gamma && !(start > 0.0))
    throw DomainError("sweep: 1/gamma must be positive");
  if (axis == SweepAxis::zeta && !(fixed > 0.0))
    throw DomainError("sweep: fixed 1/gamma must be positive");
  quadrature.validate();
}

double SweepSpec::point(int i) const {
  if (i == steps - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / (steps - 1);
}

std::vector<SweepRow> sweep(const SweepSpec& spec, int jobs) {
  spec.validate();
  std::vector<SweepRow> rows(spec.steps);
  auto evaluate = [&](int i) {
    SweepRow& row = rows[i];
    row.parameter = spec.point(i);
    row.inv_gamma = spec.axis == SweepAxis::inv_gamma ? row.parameter : spec.fixed;
    row.zeta = spec.axis == SweepAxis::zeta ? row.parameter : spec.fixed;
    try {
      const PauliLambda lam =
          lambda_numeric(PacketFrame::make(1.0 / row.inv_gamma, row.zeta), spec.quadrature);
      row.report = capacity_report(lam);
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  };

  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, spec.steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < spec.steps; i = next++) evaluate(i);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

bool cerf_crossing(const std::vector<SweepRow>& rows, double& where) {
  const SweepRow* prev = nullptr;
  for (const SweepRow& row : rows) {
    if (!row.ok) continue;
    if (prev != nullptr) {
      const double a = prev->report.cerf - kCerfThreshold;
      const double b = row.report.cerf - kCerfThreshold;
      if ((a >= 0.0) != (b >= 0.0)) {
        const double t = a / (a - b);
        where = prev->parameter + t * (row.parameter - prev->parameter);
        return true;
      }
    }
    prev = &row;
  }
  return false;
}

}  // namespace boostcap
