#pragma once

#include <istream>
#include <optional>
#include <string>

#include "boostcap/quadrature.hpp"

namespace boostcap {

inline constexpr const char* kConfigEnvVar = "BOOSTCAP_CONFIG";

// key = value lines; '#' starts a comment. Recognized keys: abs_tol, rel_tol,
// max_subdivisions. Unknown keys and malformed values throw DomainError
// naming the line.
QuadratureConfig parse_quadrature_config(std::istream& in, QuadratureConfig base);
QuadratureConfig load_quadrature_config(const std::string& path, QuadratureConfig base);

// Path named by BOOSTCAP_CONFIG, if set and non-empty.
std::optional<std::string> config_path_from_env();

}  // namespace boostcap
