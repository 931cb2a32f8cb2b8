#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hhconvex/convexity.hpp"
#include "hhconvex/function.hpp"
#include "hhconvex/report.hpp"

namespace hhc {

inline constexpr double kDefaultTolerance = 1e-9;

/// First factor of the bound in check_thm24.
///
/// `proof`: lambda(0, 1; a, b)^(1 - 1/q), the factor Hoelder's inequality
/// actually produces; it reduces to lambda1^(1 - 1/q) at alpha = m = 1.
/// `printed`: lambda(0, q; a, b)^(1 - 1/q), the form as usually quoted.
/// It is not a valid bound (see tests/unit/test_inequalities.cpp).
enum class Thm24Factor { proof, printed };

std::string_view to_string(Thm24Factor f);

struct BoundOptions {
  double tolerance = kDefaultTolerance;
  Thm24Factor thm24_factor = Thm24Factor::proof;
};

/// (ab / (b - a)) * int_a^b f(x) / x^2 dx.
double harmonic_integral_mean(const RealFunction& f, double a, double b);

/// Both sides of the trapezoid-error identity:
///   lhs = (f(a) + f(b)) / 2 - harmonic_integral_mean(f, a, b)
///   rhs = (ab (b - a) / 2) int_0^1 (1 - 2t) u^-2 f'(ab / u) dt,  u = t b + (1 - t) a
struct TrapezoidError {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  ///< |lhs - rhs|
  bool finite_differences = false;
};

TrapezoidError trapezoid_error(const RealFunction& f, double a, double b);

/// Identity report: lhs = residual, rhs = 0, holds when the residual is at
/// most tolerance * max(1, |trapezoid error|).
VerificationReport check_lemma11(const RealFunction& f, double a, double b,
                                 double tolerance = kDefaultTolerance);

/// f((a+b)/2) <= (1/(b-a)) int_a^b f <= (f(a)+f(b))/2, for convex f.
VerificationReport check_classical_hh(const RealFunction& f, double a, double b,
                                      double tolerance = kDefaultTolerance);

/// f(2ab/(a+b)) <= harmonic_integral_mean <= (f(a)+f(b))/2, for
/// harmonically convex f.
VerificationReport check_hh_harmonic(const RealFunction& f, double a, double b,
                                     double tolerance = kDefaultTolerance);

/// harmonic_integral_mean <= min{(f(a) + alpha m f(b/m)) / (alpha + 1),
///                               (f(b) + alpha m f(a/m)) / (alpha + 1)}.
/// Both candidates are kept in `terms`; a tie selects the first.
VerificationReport check_thm22(const RealFunction& f, double a, double b, double alpha, double m,
                               double tolerance = kDefaultTolerance);

/// |trapezoid error| <= ab(b-a)/2^(2-1/q) [lambda(alpha,q) |f'(a)|^q
///                       + m mu(alpha,q) |f'(b/m)|^q]^(1/q), q >= 1.
VerificationReport check_thm23(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options = {});

/// |trapezoid error| <= ab(b-a)/2 * F * [lambda(alpha,1) |f'(a)|^q
///                       + m mu(alpha,1) |f'(b/m)|^q]^(1/q), q >= 1,
/// with F chosen by options.thm24_factor.
VerificationReport check_thm24(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options = {});

/// |trapezoid error| <= ab(b-a)/2 (1/(p+1))^(1/p) (nu(alpha,q) |f'(a)|^q
///                       + m (nu(0,q) - nu(alpha,q)) |f'(b/m)|^q)^(1/q),
/// q > 1, p = q / (q - 1).
VerificationReport check_thm25(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options = {});

/// The harmonically convex special cases, written with lambda1..3 and
/// mu1, mu2. check_thm24 and check_thm25 must reproduce these at
/// alpha = m = 1.
double bound_lambda123(const RealFunction& f, double a, double b, double q);
double bound_mu12(const RealFunction& f, double a, double b, double q);

// ---------------------------------------------------------------------------
// Hypothesis checks (opt-in).

/// Where a hypothesis is sampled. `local` is [a, b/m], the interval the
/// derivative bounds name. `wide` is [a/2, 2b/m], a stand-in for the
/// statements phrased on all of (0, inf).
enum class HypothesisScope { local, wide };

std::string_view to_string(HypothesisScope s);

struct HypothesisRequest {
  std::string statement_id;
  double a = 1.0;
  double b = 2.0;
  double alpha = 1.0;
  double m = 1.0;
  double q = 1.0;
  HypothesisScope scope = HypothesisScope::local;
  SampleScheme scheme{};
};

/// Runs the convexity checker a statement's hypothesis calls for:
///   eq-1-1     f (1,1)-convex on [a, b]
///   eq-1-4     f harmonically (1,1)-convex on [a, b]
///   thm-2.2    f harmonically (alpha, m)-convex
///   thm-2.3..5 |f'|^q harmonically (alpha, m)-convex
/// lemma-1-1 has no hypothesis and yields a trivially passing report.
/// Throws std::invalid_argument for unknown statement ids.
VerificationReport check_hypothesis(const RealFunction& f, const HypothesisRequest& request);

/// Identifiers accepted by evaluate_statement and check_hypothesis.
const std::vector<std::string>& inequality_statements();

struct StatementInputs {
  double a = 1.0;
  double b = 2.0;
  double alpha = 1.0;
  double m = 1.0;
  double q = 1.0;
};

/// Dispatches to the evaluator named by statement_id (one of
/// inequality_statements()). Throws std::invalid_argument when unknown.
VerificationReport evaluate_statement(std::string_view statement_id, const RealFunction& f,
                                      const StatementInputs& in, const BoundOptions& options = {});

}  // namespace hhc
