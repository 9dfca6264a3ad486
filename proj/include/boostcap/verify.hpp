#pragma once

#include <string>
#include <vector>

namespace boostcap {

enum class VerifyLevel { fast, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  // Negative control: flip the sign of λ₂ before comparing the direct
  // density matrix with the Pauli form. The comparison must then fail.
  bool inject_lambda2_sign_error = false;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;   // worst observed deviation (or a 0/1 flag)
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyReport {
  VerifyLevel level = VerifyLevel::fast;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  std::string to_json() const;
};

// Runs every invariant suite. Individual check failures, including
// exceptions inside a check, are recorded rather than thrown.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace boostcap
