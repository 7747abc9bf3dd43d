#pragma once

#include <stdexcept>
#include <string>

namespace logcave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or schema-invalid configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the region where a chart, domain or field is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis or admissibility bound does not hold for the inputs.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed, or produced a result violating its contract.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double last_residual = 0.0)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace logcave
