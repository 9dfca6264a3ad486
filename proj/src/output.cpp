#include "boostcap/output.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>

#include <json.hpp>

#include "boostcap/errors.hpp"

namespace boostcap {

namespace {

using json = nlohmann::ordered_json;

std::string iso_utc(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Column {
  std::string name;
  bool numeric;
  std::function<double(const SweepRow&)> value;
};

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"inv_gamma", true, [](const SweepRow& r) { return r.inv_gamma; }},
      {"zeta", true, [](const SweepRow& r) { return r.zeta; }},
      {"lambda1", true, [](const SweepRow& r) { return r.report.lambda.l1; }},
      {"lambda2", true, [](const SweepRow& r) { return r.report.lambda.l2; }},
      {"lambda3", true, [](const SweepRow& r) { return r.report.lambda.l3; }},
      {"p0", true, [](const SweepRow& r) { return r.report.probs.p0; }},
      {"p1", true, [](const SweepRow& r) { return r.report.probs.p1; }},
      {"p2", true, [](const SweepRow& r) { return r.report.probs.p2; }},
      {"p3", true, [](const SweepRow& r) { return r.report.probs.p3; }},
      {"classical", true, [](const SweepRow& r) { return r.report.classical; }},
      {"hashing_raw", true, [](const SweepRow& r) { return r.report.hashing_raw; }},
      {"hashing", true, [](const SweepRow& r) { return r.report.hashing; }},
      {"cerf", true, [](const SweepRow& r) { return r.report.cerf; }},
      {"cerf_zero_capacity", false,
       [](const SweepRow& r) { return r.report.cerf_zero_capacity ? 1.0 : 0.0; }},
      {"entanglement_breaking", false,
       [](const SweepRow& r) { return r.report.entanglement_breaking ? 1.0 : 0.0; }},
  };
  return cols;
}

const Column& column(const std::string& name) {
  for (const Column& c : columns())
    if (c.name == name) return c;
  throw DomainError("unknown output column '" + name + "'");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* version() {
#ifdef BOOSTCAP_VERSION
  return BOOSTCAP_VERSION;
#else
  return "unknown";
#endif
}

std::string format_number(double x) {
  if (!std::isfinite(x)) throw IntegrityError("format_number: non-finite value in output");
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::map<std::string, std::string> resolved_conventions() {
  return {
      {"elliptic", "parameter m, K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt"},
      {"lambda2", "lambda2 = -(2/N) int int K g6 / sqrt(ab); +1 in the limit gamma -> 0"},
      {"normalization", "N = gamma pi^{3/2} erfcx(1/gamma), constant k_p/(2 pi)^3 dropped"},
      {"rapidity", "t' = cosh(zeta) t - sinh(zeta) z, z' = -sinh(zeta) t + cosh(zeta) z"},
      {"theta_c", "arccos(-tanh zeta)"},
  };
}

RunManifest RunManifest::make(const std::string& command, const QuadratureConfig& quadrature) {
  RunManifest m;
  m.tool_version = version();
  m.quadrature = quadrature;
  m.conventions = resolved_conventions();
  m.command = command;
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != nullptr && *end == '\0') t = static_cast<std::time_t>(v);
  }
  m.timestamp = iso_utc(t);
  return m;
}

std::string RunManifest::to_json() const {
  json j;
  j["tool"] = "boostcap";
  j["version"] = tool_version;
  j["command"] = command;
  j["timestamp"] = timestamp;
  j["quadrature"] = {{"abs_tol", quadrature.abs_tol},
                     {"rel_tol", quadrature.rel_tol},
                     {"max_subdivisions", quadrature.max_subdivisions}};
  j["conventions"] = json(conventions);
  j["input"] = json(input);
  return j.dump(2);
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Column& c : columns()) n.push_back(c.name);
    return n;
  }();
  return names;
}

std::vector<std::string> select_columns(const std::vector<std::string>& requested) {
  if (requested.empty()) return sweep_columns();
  for (const std::string& name : requested) column(name);
  return requested;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               const std::vector<std::string>& requested) {
  const std::vector<std::string> names = select_columns(requested);
  out << "parameter";
  for (const std::string& n : names) out << ',' << n;
  out << ",status,error\r\n";
  for (const SweepRow& row : rows) {
    out << format_number(row.parameter);
    for (const std::string& n : names) {
      const Column& c = column(n);
      out << ',';
      if (!row.ok && n != "inv_gamma" && n != "zeta") continue;
      const double v = c.value(row);
      out << (c.numeric ? format_number(v) : (v != 0.0 ? "true" : "false"));
    }
    out << ',' << (row.ok ? "ok" : "failed") << ',' << csv_quote(row.error) << "\r\n";
  }
}

void write_json(std::ostream& out, const RunManifest& manifest, const std::vector<SweepRow>& rows,
                SweepAxis axis, const std::vector<std::string>& requested) {
  const std::vector<std::string> names = select_columns(requested);
  json doc;
  doc["manifest"] = json::parse(manifest.to_json());
  doc["axis"] = axis_name(axis);
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json r;
    r["parameter"] = row.parameter;
    for (const std::string& n : names) {
      const Column& c = column(n);
      if (!row.ok && n != "inv_gamma" && n != "zeta") {
        r[n] = nullptr;
        continue;
      }
      const double v = c.value(row);
      if (c.numeric) {
        if (!std::isfinite(v)) throw IntegrityError("write_json: non-finite value in column " + n);
        r[n] = v;
      } else {
        r[n] = v != 0.0;
      }
    }
    r["status"] = row.ok ? "ok" : "failed";
    if (!row.ok) r["error"] = row.error;
    arr.push_back(std::move(r));
  }
  doc["rows"] = std::move(arr);
  out << doc.dump(2) << '\n';
}

void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, SweepAxis axis,
               std::optional<double> crossing) {
  constexpr double W = 640, H = 400, left = 60, right = 20, top = 20, bottom = 50;
  double xmin = 0.0, xmax = 1.0;
  if (!rows.empty()) {
    xmin = rows.front().parameter;
    xmax = rows.back().parameter;
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
  auto py = [&](double y) { return top + (1.0 - y) * (H - top - bottom); };
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  auto polyline = [&](auto value) {
    std::string pts;
    for (const SweepRow& r : rows) {
      if (!r.ok) continue;
      pts += fmt(px(r.parameter)) + "," + fmt(py(std::clamp(value(r), 0.0, 1.0))) + " ";
    }
    return pts;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" fill=\"none\">\n";
  out << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(xmax))
      << "\" y2=\"" << fmt(py(0)) << "\"/>\n";
  out << "<line x1=\"" << fmt(px(xmin)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(xmin))
      << "\" y2=\"" << fmt(py(1)) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = 0.25 * i;
    out << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(py(y) + 4)
        << "\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
    const double x = xmin + (xmax - xmin) * i / 4.0;
    out << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(H - bottom + 18)
        << "\" text-anchor=\"middle\">" << format_number(std::round(x * 1e4) / 1e4) << "</text>\n";
  }
  out << "<text x=\"" << fmt(0.5 * (left + W - right)) << "\" y=\"" << fmt(H - 8)
      << "\" text-anchor=\"middle\">" << (axis == SweepAxis::inv_gamma ? "1/Gamma" : "zeta")
      << "</text>\n";
  out << "<text x=\"14\" y=\"" << fmt(top + 10) << "\">bits</text>\n";
  out << "</g>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" stroke-dasharray=\"6,4\" "
         "points=\""
      << polyline([](const SweepRow& r) { return r.report.classical; }) << "\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#b22222\" stroke-width=\"2\" points=\""
      << polyline([](const SweepRow& r) { return r.report.hashing; }) << "\"/>\n";
  if (crossing && *crossing >= xmin && *crossing <= xmax) {
    out << "<line stroke=\"gray\" stroke-width=\"1\" x1=\"" << fmt(px(*crossing)) << "\" y1=\""
        << fmt(py(0)) << "\" x2=\"" << fmt(px(*crossing)) << "\" y2=\"" << fmt(py(1)) << "\"/>\n";
  }
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << fmt(W - right - 150) << "\" y=\"" << fmt(top + 14)
      << "\" fill=\"#1f4e9c\">C (classical)</text>\n"
      << "<text x=\"" << fmt(W - right - 150) << "\" y=\"" << fmt(top + 30)
      << "\" fill=\"#b22222\">Q (hashing)</text>\n"
      << "</g>\n</svg>\n";
}

}  // namespace boostcap
