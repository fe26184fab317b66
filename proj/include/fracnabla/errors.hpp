#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracnabla {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two grid functions that should share a grid do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampled function produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::size_t node)
      : std::runtime_error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// lambda coincides with a point of the spectrum (lambda = 1/h or lambda = 0).
class SingularResolventError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature or iteration could not reach its requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}
  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// The implicit stepper could not solve the nonlinear equation at node k.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(const std::string& what, std::size_t node, double residual)
      : std::runtime_error(what), node_(node), residual_(residual) {}
  std::size_t node() const noexcept { return node_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t node_;
  double residual_;
};

/// Malformed tabular input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fracnabla
