#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "boostcap/sweep.hpp"

namespace boostcap {

const char* version();

struct RunManifest {
  std::string tool_version;
  QuadratureConfig quadrature;
  std::map<std::string, std::string> conventions;
  std::string timestamp;  // ISO-8601 UTC
  std::string command;
  std::map<std::string, std::string> input;

  // Timestamp from SOURCE_DATE_EPOCH when set, otherwise the current time.
  static RunManifest make(const std::string& command, const QuadratureConfig& quadrature);
  std::string to_json() const;
};

// Sign and normalization conventions baked into the numbers.
std::map<std::string, std::string> resolved_conventions();

// Every column a sweep can emit, in output order.
const std::vector<std::string>& sweep_columns();

// Throws DomainError on an unknown column name. Empty selects all.
std::vector<std::string> select_columns(const std::vector<std::string>& requested);

// RFC 4180 CSV, '.' decimal, 17 significant digits. Failed rows leave the
// numeric cells empty and carry status "failed" with the error text.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               const std::vector<std::string>& columns = {});

// {"manifest": {...}, "rows": [...]}; numeric cells of failed rows are null.
void write_json(std::ostream& out, const RunManifest& manifest, const std::vector<SweepRow>& rows,
                SweepAxis axis, const std::vector<std::string>& columns = {});

// Static plot of C and clamped Q↑ against the sweep axis, with the Cerf
// crossing as a vertical rule when present.
void write_svg(std::ostream& out, const std::vector<SweepRow>& rows, SweepAxis axis,
               std::optional<double> cerf_crossing);

// "%.17g", with "-0" normalized to "0".
std::string format_number(double x);

}  // namespace boostcap
