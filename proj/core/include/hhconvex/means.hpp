#pragma once

#include <string_view>

#include "hhconvex/convexity.hpp"
#include "hhconvex/inequalities.hpp"
#include "hhconvex/report.hpp"

namespace hhc {

enum class MeanKind { weighted_arithmetic, arithmetic, geometric, harmonic, logarithmic_p };

std::string_view to_string(MeanKind kind);

struct MeanParams {
  double a = 1.0;
  double b = 2.0;
  /// Weight of the first argument for the weighted arithmetic mean.
  double alpha = 0.5;
  double q = 2.0;
  /// Order of the p-logarithmic mean (and the conjugate exponent where used).
  double p = 2.0;
};

/// w a + (1 - w) b. Note the weight sits on the first argument.
double weighted_arithmetic_mean(double w, double a, double b);
double arithmetic_mean(double a, double b);
double geometric_mean(double a, double b);
double harmonic_mean(double a, double b);

/// ((b^(p+1) - a^(p+1)) / ((p+1)(b-a)))^(1/p); requires a != b and
/// p not in {-1, 0}.
double logarithmic_mean_p(double p, double a, double b);

/// L_p(a,b)^p, i.e. (1/(b-a)) int_a^b x^p dx, without the final root.
double logarithmic_mean_p_pow(double p, double a, double b);

/// Positive a, b throughout; DomainError otherwise.
double mean(MeanKind kind, const MeanParams& params);

// The four power-function inequalities. All require 0 < a < b and
// 0 < alpha < 1. Each lhs is also recomputed through the inequality module
// (harmonic_integral_mean / trapezoid_error of the generating power
// function) and stored in `terms` as "lhs_via_integral".

/// G^2 L_{alpha-2}^{alpha-2} <= min{A_{1/(alpha+1)}(a^alpha, b^alpha),
///                                  A_{1/(alpha+1)}(b^alpha, a^alpha)}.
VerificationReport check_prop31(double a, double b, double alpha, double tolerance = kDefaultTolerance);

/// |A(a^k, b^k) - G^2 L_{k-2}^{k-2}|, k = alpha/q + 1, bounded through the
/// lambda/mu bound (q >= 1).
VerificationReport check_prop32(double a, double b, double alpha, double q,
                                double tolerance = kDefaultTolerance);

/// Same lhs through the lambda(., 1) bound; options.thm24_factor selects
/// the leading factor as in check_thm24.
VerificationReport check_prop33(double a, double b, double alpha, double q,
                                const BoundOptions& options = {});

/// Same lhs through the nu bound; q > 1 and 1/p + 1/q = 1 (to 1e-12).
VerificationReport check_prop34(double a, double b, double alpha, double q, double p,
                                double tolerance = kDefaultTolerance);

/// q / (q - 1) for q > 1.
double conjugate_exponent(double q);

/// The hypothesis the four inequalities inherit: x^alpha harmonically
/// (alpha, 1)-convex on [a, b].
VerificationReport check_prop_hypothesis(double a, double b, double alpha, const SampleScheme& scheme);

}  // namespace hhc
