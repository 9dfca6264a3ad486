#pragma once

#include <string>
#include <vector>

#include "boostcap/capacity.hpp"

namespace boostcap {

enum class SweepAxis { inv_gamma, zeta };

const char* axis_name(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::inv_gamma;
  double start = 0.001;
  double stop = 1.0;
  int steps = 50;
  double fixed = 0.0;  // ζ for an inv_gamma sweep, 1/Γ for a zeta sweep
  QuadratureConfig quadrature = QuadratureConfig::sweep();

  // Throws DomainError unless start < stop, steps ≥ 2, all values finite,
  // and every grid point gives Γ > 0.
  void validate() const;
  double point(int i) const;  // evenly spaced, point(steps−1) == stop
};

struct SweepRow {
  double parameter = 0.0;
  double inv_gamma = 0.0;
  double zeta = 0.0;
  bool ok = false;
  std::string error;  // set when !ok
  CapacityReport report;
};

// Rows in grid order. jobs ≤ 0 means hardware concurrency. A point whose
// evaluation throws becomes a row with ok = false; the sweep continues.
std::vector<SweepRow> sweep(const SweepSpec& spec, int jobs = 0);

// First grid interval where cerf crosses ½, located by linear interpolation.
// Returns false if the successful rows never cross.
bool cerf_crossing(const std::vector<SweepRow>& rows, double& where);

}  // namespace boostcap
