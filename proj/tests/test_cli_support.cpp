#include <doctest.h>

#include <cmath>
#include <sstream>

#include "boostcap/config.hpp"
#include "boostcap/errors.hpp"
#include "boostcap/output.hpp"
#include "boostcap/sweep.hpp"

using namespace boostcap;

TEST_CASE("config parsing") {
  std::istringstream in("# tolerances\nrel_tol = 1e-6\n\nmax_subdivisions=50  # budget\n");
  const QuadratureConfig c = parse_quadrature_config(in, QuadratureConfig::sweep());
  CHECK(c.rel_tol == 1e-6);
  CHECK(c.max_subdivisions == 50);
  CHECK(c.abs_tol == 0.0);
  std::istringstream bad("rel_tol = fast\n");
  CHECK_THROWS_AS(parse_quadrature_config(bad, {}), DomainError);
  std::istringstream unknown("tolerance = 1\n");
  CHECK_THROWS_AS(parse_quadrature_config(unknown, {}), DomainError);
  CHECK_THROWS_AS(load_quadrature_config("/nonexistent/boostcap.conf", {}), DomainError);
}

TEST_CASE("sweep spec validation") {
  SweepSpec s;
  s.start = 1.0;
  s.stop = 0.5;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.start = 0.1;
  s.stop = 0.5;
  s.steps = 1;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.steps = 3;
  CHECK(s.point(0) == 0.1);
  CHECK(s.point(2) == 0.5);
}

TEST_CASE("two-point sweep writes a valid table") {
  SweepSpec s;
  s.axis = SweepAxis::zeta;
  s.start = -1.0;
  s.stop = 0.0;
  s.steps = 2;
  s.fixed = 0.3;
  const auto rows = sweep(s, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[1].ok);
  CHECK(rows[0].inv_gamma == 0.3);
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, sweep(s, 1));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("nan") == std::string::npos);
  std::size_t lines = 0;
  for (char ch : a.str()) lines += ch == '\n';
  CHECK(lines == 3);
  std::ostringstream j;
  write_json(j, RunManifest::make("test", s.quadrature), rows, s.axis);
  CHECK(j.str().find("\"rows\"") != std::string::npos);
  std::ostringstream svg;
  write_svg(svg, rows, s.axis, std::nullopt);
  CHECK(svg.str().find("<svg") == 0);
}

TEST_CASE("failed rows are flagged, not emitted as NaN") {
  SweepRow r;
  r.parameter = 0.5;
  r.inv_gamma = 0.5;
  r.ok = false;
  r.error = "no convergence, \"budget\"";
  std::ostringstream out;
  write_csv(out, {r}, {"inv_gamma", "lambda1"});
  CHECK(out.str() == "parameter,inv_gamma,lambda1,status,error\r\n"
                     "0.5,0.5,,failed,\"no convergence, \"\"budget\"\"\"\r\n");
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.0) == "0");
  CHECK_THROWS_AS(format_number(NAN), IntegrityError);
  CHECK_THROWS_AS(select_columns({"nope"}), DomainError);
}

TEST_CASE("manifest honors SOURCE_DATE_EPOCH") {
  setenv("SOURCE_DATE_EPOCH", "0", 1);
  const RunManifest m = RunManifest::make("x", {});
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(m.timestamp == "1970-01-01T00:00:00Z");
}
