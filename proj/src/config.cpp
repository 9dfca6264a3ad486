#include "boostcap/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "boostcap/errors.hpp"

namespace boostcap {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(int line, const std::string& why) {
  std::ostringstream msg;
  msg << "config line " << line << ": " << why;
  throw DomainError(msg.str());
}

template <class T>
T parse_number(const std::string& text, int line) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) bad_line(line, "cannot parse '" + text + "'");
  return value;
}

}  // namespace

QuadratureConfig parse_quadrature_config(std::istream& in, QuadratureConfig cfg) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) bad_line(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "abs_tol")
      cfg.abs_tol = parse_number<double>(value, line);
    else if (key == "rel_tol")
      cfg.rel_tol = parse_number<double>(value, line);
    else if (key == "max_subdivisions")
      cfg.max_subdivisions = parse_number<int>(value, line);
    else
      bad_line(line, "unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

QuadratureConfig load_quadrature_config(const std::string& path, QuadratureConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  return parse_quadrature_config(in, base);
}

std::optional<std::string> config_path_from_env() {
  const char* v = std::getenv(kConfigEnvVar);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace boostcap
