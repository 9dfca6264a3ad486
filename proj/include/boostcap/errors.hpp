#pragma once

#include <stdexcept>
#include <string>

namespace boostcap {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument inside the domain but outside the range where the implementation
// is validated. Callers are expected to fall back to another route.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Kinematic configuration at (or numerically at) a coordinate singularity.
class SingularConfigurationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

// A computed object violates an invariant it must satisfy by construction
// (complete positivity, pole cancellation, monotone bracketing, ...).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Probability vector with a component below the admissible tolerance.
class NotAChannelError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root search found no sign change in its scan range.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boostcap
