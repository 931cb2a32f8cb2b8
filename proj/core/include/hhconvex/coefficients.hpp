#pragma once

#include <string>
#include <string_view>

namespace hhc {

enum class Provenance { closed_form, quadrature_oracle };

std::string_view to_string(Provenance p);

/// One coefficient value with the parameters it was computed for.
/// `error_estimate` is the quadrature error for oracle values, 0 otherwise.
struct Coefficient {
  std::string name;
  double alpha = 0.0;
  double q = 1.0;
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  Provenance provenance = Provenance::closed_form;
  double error_estimate = 0.0;
};

// All families require 0 < a < b and q >= 1 (q > 1 for mu12); alpha, where
// present, lies in [0, 1]. Violations throw DomainError. Accuracy failures
// in 2F1 or the quadrature propagate as AccuracyError.
//
// The integrals, with u(t) = t b + (1 - t) a:
//   lambda(alpha, q) = int_0^1 |1 - 2t| t^alpha u^(-2q) dt
//   mu(alpha, q)     = int_0^1 |1 - 2t| (1 - t^alpha) u^(-2q) dt
//   nu(alpha, q)     = int_0^1 t^alpha u^(-2q) dt
//   lambda1, 2, 3    = lambda(0, 1), lambda(1, 1), mu(1, 1)
//   mu1, mu2         = nu(1, q), nu(0, q) - nu(1, q)

/// Three-term Beta/2F1 closed form.
Coefficient lambda_coeff(double alpha, double q, double a, double b);
Coefficient lambda_coeff_oracle(double alpha, double q, double a, double b);

/// lambda(0, q) - lambda(alpha, q); exactly 0 at alpha = 0.
Coefficient mu_coeff(double alpha, double q, double a, double b);
Coefficient mu_coeff_oracle(double alpha, double q, double a, double b);

Coefficient nu_coeff(double alpha, double q, double a, double b);
Coefficient nu_coeff_oracle(double alpha, double q, double a, double b);

struct Lambda123 {
  Coefficient lambda1;
  Coefficient lambda2;
  Coefficient lambda3;
};

/// Logarithmic closed forms; lambda3 is returned as lambda1 - lambda2.
/// For b - a < 1e-6 a the logarithmic forms lose too many digits and all
/// three values come from the oracle instead (see provenance).
Lambda123 lambda123(double a, double b);
Lambda123 lambda123_oracle(double a, double b);

/// The standalone logarithmic expression for lambda3, kept for cross-checks
/// against lambda1 - lambda2.
double lambda3_direct(double a, double b);

/// Relative width below which lambda123 switches to the oracle.
inline constexpr double kLambda123DegenerateWidth = 1e-6;

struct Mu12 {
  Coefficient mu1;
  Coefficient mu2;
};

/// Power closed forms; requires q > 1 (the (1 - q) factor in the
/// denominator vanishes at q = 1). Both numerators cancel to second order in
/// b - a, so for (b - a) / a < kMu12DegenerateWidth the oracle is used.
Mu12 mu12(double q, double a, double b);
Mu12 mu12_oracle(double q, double a, double b);

inline constexpr double kMu12DegenerateWidth = 1e-2;

struct OracleComparison {
  double closed_form = 0.0;
  double oracle = 0.0;
  /// |closed - oracle| / |oracle|; 0 when both vanish, inf when only the
  /// oracle does.
  double relative_difference = 0.0;
  bool agree = false;
};

/// Flags disagreement between a closed form and its oracle beyond
/// rel_tol * max(1, |closed_form|).
OracleComparison compare_with_oracle(const Coefficient& closed, const Coefficient& oracle,
                                     double rel_tol = 1e-8);

}  // namespace hhc
