#include "boostcap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "boostcap/capacity.hpp"
#include "boostcap/channel.hpp"
#include "boostcap/lorentz.hpp"
#include "boostcap/sweep.hpp"

namespace boostcap {

namespace {

using Clock = std::chrono::steady_clock;

struct Grid {
  std::vector<double> zetas;
  std::vector<double> gammas;
  int states;
};

Grid channel_grid(VerifyLevel level) {
  if (level == VerifyLevel::full) return {{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}, {0.1, 0.5, 1.0, 5.0}, 8};
  return {{-1.0, 0.0, 1.0}, {0.5, 5.0}, 2};
}

std::vector<QubitState> random_states(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> chi(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> xi(0.0, std::numbers::pi);
  std::vector<QubitState> out;
  for (int i = 0; i < n; ++i) out.push_back({chi(rng), xi(rng)});
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CheckResult make(const std::string& name, double residual, double tolerance,
                 const std::string& detail = {}) {
  return {name, residual, tolerance, residual <= tolerance, 0.0, detail};
}

CheckResult flag(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? 0.0 : 1.0, 0.0, ok, 0.0, detail};
}

CheckResult pauli_identification(VerifyLevel level, bool flip) {
  const Grid g = channel_grid(level);
  const auto states = random_states(g.states, 20240611);
  double worst = 0.0, worst_trace = 0.0;
  for (double z : g.zetas) {
    for (double gamma : g.gammas) {
      const PacketFrame f = PacketFrame::make(gamma, z);
      PauliLambda lam = lambda_numeric(f);
      if (flip) lam.l2 = -lam.l2;
      for (const QubitState& s : states) {
        const DensityMatrix2 rho = rho_direct(s, f);
        worst = std::max(worst, (rho - apply_pauli(lam, s)).cwiseAbs().maxCoeff());
        worst_trace = std::max(worst_trace, std::abs(rho.trace().real() - 1.0));
      }
    }
  }
  std::ostringstream d;
  d << "max |rho_direct - apply_pauli| over " << g.zetas.size() * g.gammas.size() * g.states
    << " points; max trace deviation " << worst_trace;
  if (flip) d << "; lambda2 sign deliberately flipped";
  CheckResult r = make("pauli_identification", worst, 1e-7, d.str());
  r.passed = r.passed && worst_trace <= 1e-9;
  return r;
}

std::vector<CheckResult> channel_identities(VerifyLevel level) {
  const Grid g = channel_grid(level);
  double r1 = 0.0, r2 = 0.0;
  for (double z : g.zetas)
    for (double gamma : g.gammas) {
      const IdentityResiduals r = identity_residuals(PacketFrame::make(gamma, z));
      r1 = std::max(r1, r.r1);
      r2 = std::max(r2, r.r2);
    }
  return {make("identity_diagonal", r1, 1e-10, "max |int K g1/a - int K g3/b| / N"),
          make("identity_z", r2, 1e-8, "max |int K g2/a + int K g4/b| / N")};
}

CheckResult normalization_invariance(VerifyLevel level) {
  const std::vector<double> gammas =
      level == VerifyLevel::full ? std::vector<double>{0.05, 0.1, 0.5, 1.0, 5.0, 20.0}
                                 : std::vector<double>{0.5, 1.0};
  double worst = 0.0;
  for (double gamma : gammas) {
    const double closed = normalization({gamma, 0.0}, NormalizationMethod::closed_form);
    for (double z : {-2.0, -1.0, 0.0, 1.0, 2.0})
      worst = std::max(worst, rel(normalization({gamma, z}, NormalizationMethod::quadrature), closed));
    worst = std::max(worst, rel(2.0 * std::numbers::pi * rest_frame_trace(gamma), closed));
  }
  return make("normalization_invariance", worst, 1e-8,
              "quadrature over zeta in [-2, 2] and the rest-frame trace vs closed form");
}

CheckResult lambda3_closed_form(VerifyLevel level) {
  const std::vector<double> gammas = level == VerifyLevel::full
                                         ? std::vector<double>{0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0}
                                         : std::vector<double>{0.5, 2.0, 5.0};
  double worst = 0.0;
  for (double gamma : gammas)
    worst = std::max(worst, rel(lambda3_closed(gamma), lambda_numeric({gamma, 0.0}).l3));
  return make("lambda3_closed_form", worst, 1e-6, "relative error vs 2D quadrature at zeta = 0");
}

CheckResult series_self_consistency() {
  double worst = 0.0;
  for (double gamma : {5.0, 10.0}) {
    const double L = default_series_cutoff(gamma, 6);
    const Lambda12 s = lambda12_series(gamma, 40, L);
    const Lambda12 t = lambda12_truncated(gamma, L);
    worst = std::max({worst, rel(s.l1, t.l1), rel(s.l2, t.l2)});
  }
  return make("series_self_consistency", worst, 1e-8,
              "40-term expansion vs the truncated-domain integral it expands");
}

CheckResult little_group_z_boost(VerifyLevel level) {
  const int n = level == VerifyLevel::full ? 100 : 20;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> zeta(-3.0, 3.0), theta(1e-3, std::numbers::pi - 1e-3),
      phi(0.0, 2.0 * std::numbers::pi), log_omega(std::log(0.1), std::log(10.0));
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = zeta(rng), t = theta(rng), p = phi(rng), w = std::exp(log_omega(rng));
    const LorentzMatrix W = little_group_matrix(boost_z(z), null_vector(w, t, p));
    const LittleGroupDecomposition d = little_group(boost_z(z), null_vector(w, t, p));
    const double a1 = z_boost_translation(z, w, t);
    worst = std::max({worst, std::abs(d.wigner_angle), std::abs(d.a2), std::abs(d.a1 - a1),
                      (W - e2_element(0.0, a1, 0.0)).cwiseAbs().maxCoeff()});
  }
  return make("little_group_z_boost", worst, 1e-10,
              "max |Wigner angle|, |a2|, |a1 - a1(zeta, omega, theta)| and |W - T(a1)|");
}

std::vector<CheckResult> capacity_vs_inverse_spread(VerifyLevel level) {
  SweepSpec spec;
  spec.axis = SweepAxis::inv_gamma;
  spec.start = 0.001;
  spec.stop = 1.0;
  spec.steps = level == VerifyLevel::full ? 200 : 40;
  spec.fixed = 0.0;
  const auto rows = sweep(spec, 1);
  bool ordered = true, monotone = true, all_ok = true;
  int crossings = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    all_ok = all_ok && r.ok;
    if (!r.ok) continue;
    const CapacityReport& c = r.report;
    ordered = ordered && c.hashing >= 0.0 && c.hashing <= c.classical && c.classical <= 1.0;
    if (i > 0 && rows[i - 1].ok) {
      monotone = monotone && c.classical >= rows[i - 1].report.classical - 1e-9;
      crossings += (c.cerf >= kCerfThreshold) != (rows[i - 1].report.cerf >= kCerfThreshold);
    }
  }
  const GammaThreshold gt = gamma_threshold(0.0);
  std::ostringstream d;
  d << "1/Gamma* = " << gt.inv_gamma << " (" << gt.crossings.size() << " crossing(s))";
  const bool bracket = gt.crossings.size() == 1 && gt.inv_gamma > 0.05 && gt.inv_gamma < 0.3;
  return {flag("capacity_bounds_ordered", all_ok && ordered, "0 <= Q <= C <= 1 along 1/Gamma"),
          flag("classical_capacity_monotone", monotone, "C nondecreasing in 1/Gamma"),
          flag("single_cerf_crossing", crossings == 1 && bracket, d.str())};
}

double hashing_at(double inv_gamma, double zeta) {
  return capacity_report(lambda_numeric(PacketFrame::make(1.0 / inv_gamma, zeta),
                                        QuadratureConfig::sweep()))
      .hashing;
}

std::vector<CheckResult> boost_amplification(VerifyLevel level) {
  std::vector<CheckResult> out;
  const std::vector<double> poor = level == VerifyLevel::full ? std::vector<double>{0.005, 0.05}
                                                              : std::vector<double>{0.05};
  for (double ig : poor) {
    std::ostringstream name, d;
    name << "boost_threshold_inv_gamma_" << ig;
    const BoostThreshold b = boost_threshold(1.0 / ig);
    const double q0 = hashing_at(ig, 0.0);
    const double q_after = hashing_at(ig, b.zeta - 1e-3);
    d << "zeta* = " << b.zeta << ", Q(0) = " << q0 << ", Q(zeta* - 1e-3) = " << q_after;
    out.push_back(flag(name.str(), q0 == 0.0 && b.zeta < 0.0 && q_after > 0.0, d.str()));
  }
  {
    double prev = hashing_at(0.3, 0.0);
    bool increasing = prev > 0.0;
    for (int k = 1; k <= 12; ++k) {
      const double q = hashing_at(0.3, -0.25 * k);
      increasing = increasing && q > prev;
      prev = q;
    }
    out.push_back(flag("boost_increases_capacity", increasing,
                       "Q strictly increasing as zeta decreases from 0 to -3 at 1/Gamma = 0.3"));
  }
  double worst = 1.0;
  for (double ig : {0.005, 0.05, 0.3}) {
    const CapacityReport r =
        capacity_report(lambda_numeric(PacketFrame::make(1.0 / ig, -6.0), QuadratureConfig::sweep()));
    worst = std::min({worst, r.classical, r.hashing});
  }
  std::ostringstream d;
  d << "min(C, Q) at zeta = -6 is " << worst;
  out.push_back(flag("strong_boost_limit", worst > 0.99, d.str()));
  return out;
}

CheckResult depolarized_one_pauli() {
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 10; ++i) {
    const DepolarizedCompositeReport r = depolarized_composite_check(0.1 * i);
    ok = ok && r.passed;
    worst = std::min(worst, r.cerf_composite);
  }
  std::ostringstream d;
  d << "min cerf of the composite " << worst;
  return flag("depolarized_one_pauli", ok, d.str());
}

CheckResult eb_inside_cerf(VerifyLevel level) {
  const int n = level == VerifyLevel::full ? 80 : 30;
  bool implied = true;
  double last_eb = 0.0, last_cerf = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ig = std::exp(std::log(1e-3) + (std::log(1.0) - std::log(1e-3)) * i / (n - 1));
    const CapacityReport r =
        capacity_report(lambda_numeric(PacketFrame::make(1.0 / ig, 0.0), QuadratureConfig::sweep()));
    if (r.entanglement_breaking) {
      implied = implied && r.cerf_zero_capacity;
      last_eb = ig;
    }
    if (r.cerf_zero_capacity) last_cerf = ig;
  }
  std::ostringstream d;
  d << "largest sampled 1/Gamma with EB " << last_eb << ", with cerf >= 1/2 " << last_cerf;
  return flag("entanglement_breaking_inside_cerf", implied && last_eb < last_cerf, d.str());
}

void timed(std::vector<CheckResult>& out, const std::string& name,
           const std::function<std::vector<CheckResult>()>& f) {
  const auto t0 = Clock::now();
  std::vector<CheckResult> r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r = {CheckResult{name, 1.0, 0.0, false, 0.0, std::string("exception: ") + e.what()}};
  }
  const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  for (CheckResult& c : r) c.seconds = dt / r.size();
  out.insert(out.end(), r.begin(), r.end());
}

}  // namespace

bool VerifyReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = level == VerifyLevel::full ? "full" : "fast";
  j["passed"] = passed();
  j["seconds"] = seconds;
  auto arr = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks)
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance},
                   {"seconds", c.seconds},
                   {"detail", c.detail}});
  j["checks"] = std::move(arr);
  return j.dump(2);
}

VerifyReport run_verify(const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  const VerifyLevel lv = opt.level;
  VerifyReport rep;
  rep.level = lv;
  auto& c = rep.checks;
  timed(c, "pauli_identification",
        [&] { return std::vector{pauli_identification(lv, opt.inject_lambda2_sign_error)}; });
  timed(c, "channel_identities", [&] { return channel_identities(lv); });
  timed(c, "normalization_invariance", [&] { return std::vector{normalization_invariance(lv)}; });
  timed(c, "lambda3_closed_form", [&] { return std::vector{lambda3_closed_form(lv)}; });
  timed(c, "little_group_z_boost", [&] { return std::vector{little_group_z_boost(lv)}; });
  timed(c, "depolarized_one_pauli", [&] { return std::vector{depolarized_one_pauli()}; });
  timed(c, "capacity_vs_inverse_spread", [&] { return capacity_vs_inverse_spread(lv); });
  timed(c, "boost_amplification", [&] { return boost_amplification(lv); });
  if (lv == VerifyLevel::full) {
    timed(c, "series_self_consistency", [&] { return std::vector{series_self_consistency()}; });
    timed(c, "entanglement_breaking_inside_cerf", [&] { return std::vector{eb_inside_cerf(lv)}; });
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace boostcap
