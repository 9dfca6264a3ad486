// boostcap: capacities of the boosted single-photon polarization channel.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boostcap/capacity.hpp"
#include "boostcap/channel.hpp"
#include "boostcap/config.hpp"
#include "boostcap/errors.hpp"
#include "boostcap/lorentz.hpp"
#include "boostcap/output.hpp"
#include "boostcap/sweep.hpp"
#include "boostcap/verify.hpp"

using namespace boostcap;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kUsage = 2, kConvergence = 3 };

struct Common {
  std::optional<std::string> config;
  std::optional<double> rel_tol, abs_tol;
  std::optional<int> max_subdivisions;
  std::string format = "json";
  std::string out;
};

struct Point {
  std::optional<double> gamma, inv_gamma, zeta, velocity;

  double resolved_gamma() const {
    if (gamma && inv_gamma) throw PreconditionError("give either --gamma or --inv-gamma, not both");
    if (gamma) return *gamma;
    if (inv_gamma) {
      if (!(*inv_gamma > 0.0)) throw DomainError("--inv-gamma must be positive");
      return 1.0 / *inv_gamma;
    }
    throw PreconditionError("one of --gamma or --inv-gamma is required");
  }

  double resolved_zeta() const {
    if (zeta && velocity) throw PreconditionError("give either --zeta or --velocity, not both");
    if (velocity) {
      if (!(std::abs(*velocity) < 1.0)) throw DomainError("--velocity must lie in (-1, 1)");
      return std::atanh(*velocity);
    }
    return zeta.value_or(0.0);
  }
};

QuadratureConfig resolve(const Common& c, QuadratureConfig base) {
  if (c.config) {
    base = load_quadrature_config(*c.config, base);
  } else if (auto env = config_path_from_env()) {
    base = load_quadrature_config(*env, base);
  }
  if (c.rel_tol) base.rel_tol = *c.rel_tol;
  if (c.abs_tol) base.abs_tol = *c.abs_tol;
  if (c.max_subdivisions) base.max_subdivisions = *c.max_subdivisions;
  base.validate();
  return base;
}

void add_common(CLI::App* app, Common& c, bool formats) {
  app->add_option("--config", c.config, "Quadrature config file (overrides $BOOSTCAP_CONFIG)");
  app->add_option("--rel-tol", c.rel_tol, "Relative quadrature tolerance");
  app->add_option("--abs-tol", c.abs_tol, "Absolute quadrature tolerance");
  app->add_option("--max-subdivisions", c.max_subdivisions, "Adaptive subdivision budget");
  app->add_option("--out,-o", c.out, "Output file (default stdout)");
  if (formats)
    app->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_gamma(CLI::App* app, Point& p) {
  app->add_option("--gamma", p.gamma, "Momentum spread Gamma (> 0)");
  app->add_option("--inv-gamma", p.inv_gamma, "Inverse spread 1/Gamma (> 0)");
}

void add_zeta(CLI::App* app, Point& p) {
  app->add_option("--zeta", p.zeta, "Boost rapidity along z (default 0)");
  app->add_option("--velocity", p.velocity, "Boost velocity v = tanh(zeta), |v| < 1");
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

class Sink {
 public:
  explicit Sink(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw PreconditionError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open output file '" + path + "'");
  f << text;
}

json manifest_json(const RunManifest& m) { return json::parse(m.to_json()); }

json lambda_json(const PauliLambda& l) {
  return {{"lambda1", l.l1}, {"lambda2", l.l2}, {"lambda3", l.l3}};
}

// Single-point results reuse the sweep row writers so CSV and JSON match.
void emit_point(const Common& c, RunManifest m, const SweepRow& row, SweepAxis axis) {
  Sink sink(c.out);
  if (c.format == "csv") {
    write_csv(sink.stream(), {row});
    if (!c.out.empty()) write_text_file(c.out + ".manifest.json", m.to_json() + "\n");
  } else {
    write_json(sink.stream(), m, {row}, axis);
  }
}

std::string fmt(double x) { return format_number(x); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacities of the Lorentz-boosted single-photon polarization channel"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  Common common;
  Point point;

  auto* lambdas = app.add_subcommand("lambdas", "Pauli eigenvalues lambda_1..3 at one point");
  add_common(lambdas, common, false);
  add_gamma(lambdas, point);
  add_zeta(lambdas, point);

  auto* capacity = app.add_subcommand("capacity", "Capacity report at one point");
  add_common(capacity, common, true);
  add_gamma(capacity, point);
  add_zeta(capacity, point);

  SweepSpec spec;
  int jobs = 0;
  std::string svg_path;
  std::vector<std::string> columns;
  auto add_sweep = [&](CLI::App* s) {
    add_common(s, common, true);
    s->add_option("--start", spec.start, "First grid value")->required();
    s->add_option("--stop", spec.stop, "Last grid value")->required();
    s->add_option("--steps", spec.steps, "Number of grid points (>= 2)")->capture_default_str();
    s->add_option("--jobs,-j", jobs, "Worker threads (0 = machine parallelism)");
    s->add_option("--svg", svg_path, "Also write an SVG plot of C and Q");
    s->add_option("--columns", columns, "Comma-separated output columns")->delimiter(',');
  };
  auto* sweep_gamma = app.add_subcommand("sweep-gamma", "Sweep 1/Gamma at fixed rapidity");
  add_sweep(sweep_gamma);
  add_zeta(sweep_gamma, point);
  auto* sweep_zeta = app.add_subcommand("sweep-zeta", "Sweep rapidity at fixed Gamma");
  add_sweep(sweep_zeta);
  add_gamma(sweep_zeta, point);

  double zeta_tol = SolverConfig{}.zeta_tolerance;
  double inv_gamma_tol = SolverConfig{}.inv_gamma_rel_tol;
  auto* tboost = app.add_subcommand("threshold-boost", "Rapidity at which Q becomes positive");
  add_common(tboost, common, false);
  add_gamma(tboost, point);
  tboost->add_option("--zeta-tol", zeta_tol, "Absolute tolerance on zeta*")->capture_default_str();
  auto* tgamma = app.add_subcommand("threshold-gamma", "1/Gamma at which cerf crosses 1/2");
  add_common(tgamma, common, false);
  add_zeta(tgamma, point);
  tgamma->add_option("--rel-tol-inv-gamma", inv_gamma_tol, "Relative tolerance on 1/Gamma*")
      ->capture_default_str();

  std::string level = "fast";
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  verify->add_flag("--inject-lambda2-sign-error", inject,
                   "Test mode: flip the sign of lambda_2 (the run must fail)");
  verify->add_option("--out,-o", common.out, "Report file (default stdout)");

  double omega = 1.0, theta = 1.0, phi = 0.0;
  auto* wigner = app.add_subcommand("wigner-check", "Little-group element of a z boost");
  add_zeta(wigner, point);
  wigner->add_option("--omega", omega, "Photon energy")->capture_default_str();
  wigner->add_option("--theta", theta, "Polar angle [rad]")->capture_default_str();
  wigner->add_option("--phi", phi, "Azimuth [rad]")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  const std::string cmd = command_line(argc, argv);
  try {
    if (*lambdas || *capacity) {
      const bool full = capacity->parsed();
      const QuadratureConfig q = resolve(common, QuadratureConfig::verification());
      const double gamma = point.resolved_gamma();
      const double zeta = point.resolved_zeta();
      RunManifest m = RunManifest::make(cmd, q);
      m.input = {{"gamma", fmt(gamma)}, {"zeta", fmt(zeta)}};
      const PacketFrame frame = PacketFrame::make(gamma, zeta);
      if (!full) {
        const LambdaResult r = lambda_integrals(frame, q);
        json j;
        j["manifest"] = manifest_json(m);
        j["gamma"] = gamma;
        j["zeta"] = zeta;
        j["normalization"] = r.normalization;
        j["lambda"] = lambda_json(r.lambda);
        j["error_bounds"] = r.error;
        Sink sink(common.out);
        sink.stream() << j.dump(2) << '\n';
        return kOk;
      }
      SweepRow row;
      row.parameter = 1.0 / gamma;
      row.inv_gamma = 1.0 / gamma;
      row.zeta = zeta;
      row.report = capacity_report(lambda_numeric(frame, q));
      row.ok = true;
      emit_point(common, m, row, SweepAxis::inv_gamma);
      return kOk;
    }

    if (*sweep_gamma || *sweep_zeta) {
      spec.axis = *sweep_gamma ? SweepAxis::inv_gamma : SweepAxis::zeta;
      spec.fixed = *sweep_gamma ? point.resolved_zeta() : 1.0 / point.resolved_gamma();
      spec.quadrature = resolve(common, QuadratureConfig::sweep());
      const std::vector<std::string> cols = select_columns(columns);
      spec.validate();
      RunManifest m = RunManifest::make(cmd, spec.quadrature);
      m.input = {{"axis", axis_name(spec.axis)},
                 {"start", fmt(spec.start)},
                 {"stop", fmt(spec.stop)},
                 {"steps", std::to_string(spec.steps)},
                 {spec.axis == SweepAxis::inv_gamma ? "zeta" : "inv_gamma", fmt(spec.fixed)}};
      const std::vector<SweepRow> rows = sweep(spec, jobs);
      {
        Sink sink(common.out);
        if (common.format == "csv") {
          write_csv(sink.stream(), rows, cols);
          if (!common.out.empty())
            write_text_file(common.out + ".manifest.json", m.to_json() + "\n");
        } else {
          write_json(sink.stream(), m, rows, spec.axis, cols);
        }
      }
      if (!svg_path.empty()) {
        double where = 0.0;
        std::optional<double> crossing;
        if (cerf_crossing(rows, where)) crossing = where;
        std::ofstream f(svg_path, std::ios::binary);
        if (!f) throw PreconditionError("cannot open SVG file '" + svg_path + "'");
        write_svg(f, rows, spec.axis, crossing);
      }
      int failed = 0;
      for (const SweepRow& r : rows) failed += !r.ok;
      if (failed > 0) {
        std::cerr << "boostcap: " << failed << " of " << rows.size() << " grid points failed\n";
        return kConvergence;
      }
      return kOk;
    }

    if (*tboost || *tgamma) {
      SolverConfig s;
      s.quadrature = resolve(common, QuadratureConfig::sweep());
      s.zeta_tolerance = zeta_tol;
      s.inv_gamma_rel_tol = inv_gamma_tol;
      RunManifest m = RunManifest::make(cmd, s.quadrature);
      json j;
      if (*tboost) {
        const double gamma = point.resolved_gamma();
        m.input = {{"gamma", fmt(gamma)}};
        const BoostThreshold b = boost_threshold(gamma, s);
        j["manifest"] = manifest_json(m);
        j["zeta_star"] = b.zeta;
        j["velocity_star"] = std::tanh(b.zeta);
        j["scan"] = {{"zeta", b.scan_zeta}, {"hashing_raw", b.scan_hashing}};
      } else {
        const double zeta = point.resolved_zeta();
        m.input = {{"zeta", fmt(zeta)}};
        const GammaThreshold g = gamma_threshold(zeta, s);
        j["manifest"] = manifest_json(m);
        j["inv_gamma_star"] = g.inv_gamma;
        j["gamma_star"] = 1.0 / g.inv_gamma;
        j["crossings"] = g.crossings;
      }
      Sink sink(common.out);
      sink.stream() << j.dump(2) << '\n';
      return kOk;
    }

    if (*verify) {
      VerifyOptions o;
      o.level = level == "full" ? VerifyLevel::full : VerifyLevel::fast;
      o.inject_lambda2_sign_error = inject;
      const VerifyReport r = run_verify(o);
      {
        Sink sink(common.out);
        sink.stream() << r.to_json() << '\n';
      }
      for (const CheckResult& c : r.checks)
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "  residual=" << c.residual
                  << " tol=" << c.tolerance << "  " << c.detail << '\n';
      return r.passed() ? kOk : kInvariant;
    }

    if (*wigner) {
      const double zeta = point.resolved_zeta();
      const FourVector p = null_vector(omega, theta, phi);
      const LittleGroupDecomposition d = little_group(boost_z(zeta), p);
      const double a1 = z_boost_translation(zeta, omega, theta);
      const LorentzMatrix W = little_group_matrix(boost_z(zeta), p);
      const double res = (W - e2_element(0.0, a1, 0.0)).cwiseAbs().maxCoeff();
      const bool ok = std::abs(d.wigner_angle) <= 1e-10 && std::abs(d.a2) <= 1e-10 &&
                      std::abs(d.a1 - a1) <= 1e-10 && res <= 1e-10;
      json j = {{"zeta", zeta},        {"omega", omega},     {"theta", theta},
                {"phi", phi},          {"wigner_angle", d.wigner_angle},
                {"a1", d.a1},          {"a2", d.a2},         {"a1_predicted", a1},
                {"metric_residual", d.residual},             {"form_residual", res},
                {"passed", ok}};
      std::cout << j.dump(2) << '\n';
      return ok ? kOk : kInvariant;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "boostcap: no convergence: " << e.what() << " (estimate " << e.estimate()
              << ", error bound " << e.error_bound() << ")\n";
    return kConvergence;
  } catch (const IntegrityError& e) {
    std::cerr << "boostcap: invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const NotFoundError& e) {
    std::cerr << "boostcap: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::logic_error& e) {
    std::cerr << "boostcap: " << e.what() << '\n';
    return kUsage;
  } catch (const std::range_error& e) {
    std::cerr << "boostcap: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "boostcap: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
