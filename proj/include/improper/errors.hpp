#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace improper {

/// Argument outside the mathematical domain of an operation (nonpositive
/// width, infinite endpoint where a finite one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested derivative does not exist classically or exceeds the order cap.
class UnsupportedDerivative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(double estimate, double error_bound)
      : std::runtime_error("quadrature subdivision budget exhausted"),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A limit that was required to be finite diverged.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal post-check failed (e.g. flux conservation in scattering).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroundStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<std::string> expected = {})
      : std::runtime_error(message),
        offset_(offset),
        expected_(std::move(expected)) {}

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace improper
