#pragma once

#include <functional>
#include <vector>

namespace hhc {

/// Tolerances and budget for adaptive integration. The oracle role of the
/// quadrature requires it to be well below the 1e-8 comparison threshold,
/// hence the tight defaults.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Interior points where the integrand has kinks; the interval is split
  /// at these before any adaptive refinement.
  std::vector<double> breakpoints;

  QuadratureSpec with_breakpoints(std::vector<double> points) const {
    QuadratureSpec copy = *this;
    copy.breakpoints = std::move(points);
    return copy;
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
};

using ScalarFunction = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [lo, hi].
///
/// Refines the subinterval with the largest error estimate until the summed
/// estimate is at most max(abs_tol, rel_tol * |value|), or has reached the
/// round-off floor 100 eps * int |f| (relevant when f cancels heavily).
///
/// Throws DomainError for lo >= hi, non-positive tolerances or breakpoints
/// outside (lo, hi); EvaluationError if f returns a non-finite value;
/// AccuracyError (carrying the best estimate) when the subdivision budget
/// runs out.
QuadratureResult integrate(const ScalarFunction& f, double lo, double hi,
                           const QuadratureSpec& spec = {});

/// Convenience overload returning only the value.
inline double integrate_value(const ScalarFunction& f, double lo, double hi,
                              const QuadratureSpec& spec = {}) {
  return integrate(f, lo, hi, spec).value;
}

}  // namespace hhc
