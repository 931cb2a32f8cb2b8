#pragma once

#include <stdexcept>
#include <string>

namespace hhc {

/// Input outside the mathematical domain of an operation (a >= b, q <= 1
/// where q > 1 is required, a sample point outside a function's domain, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or quadrature did not reach its tolerance within budget.
/// Carries the best estimate so callers can still report it.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// A function returned a non-finite value at a sample point.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), at_(at) {}

  double at() const noexcept { return at_; }

 private:
  double at_;
};

}  // namespace hhc
