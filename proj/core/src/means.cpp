#include "hhconvex/means.hpp"

#include <cmath>

#include "hhconvex/errors.hpp"
#include "hhconvex/function.hpp"

namespace hhc {

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::weighted_arithmetic: return "A_w";
    case MeanKind::arithmetic: return "A";
    case MeanKind::geometric: return "G";
    case MeanKind::harmonic: return "H";
    case MeanKind::logarithmic_p: return "L_p";
  }
  return "?";
}

namespace {

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("means require positive finite arguments, got " + format_real(a) + ", " +
                      format_real(b));
  }
}

void require_prop(double a, double b, double alpha) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw DomainError("require 0 < a < b, got a = " + format_real(a) + ", b = " + format_real(b));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("require 0 < alpha < 1, got " + format_real(alpha));
  }
}

// x^k / k on (0, inf), the function whose trapezoid error the last three
// inequalities bound.
RealFunction scaled_power(double k) {
  return RealFunction("pow:" + format_real(k) + "/" + format_real(k), {k},
                      [k](double x) { return std::pow(x, k) / k; },
                      [k](double x) { return std::pow(x, k - 1.0); }, Interval::positive_reals());
}

// |A(a^k, b^k) - G^2 L_{k-2}^{k-2}| with k = alpha/q + 1.
double trapezoid_lhs(double a, double b, double k) {
  return std::fabs(arithmetic_mean(std::pow(a, k), std::pow(b, k)) -
                   a * b * logarithmic_mean_p_pow(k - 2.0, a, b));
}

VerificationReport from_bound(const char* id, double a, double b, double alpha, double q,
                              const VerificationReport& bound_report, double scale) {
  const double k = alpha / q + 1.0;
  VerificationReport r;
  r.statement_id = id;
  r.tolerance = bound_report.tolerance;
  r.inputs = Json{{"a", a}, {"b", b}, {"alpha", alpha}, {"q", q}};
  r.set_sides(trapezoid_lhs(a, b, k), scale * bound_report.rhs);
  r.add_term("lhs_via_integral", scale * bound_report.lhs);
  for (const auto& [name, value] : bound_report.terms) {
    r.add_term(name, value);
  }
  r.notes = bound_report.notes;
  return r;
}

}  // namespace

double weighted_arithmetic_mean(double w, double a, double b) { return w * a + (1.0 - w) * b; }

double arithmetic_mean(double a, double b) { return (a + b) / 2.0; }

double geometric_mean(double a, double b) {
  require_positive(a, b);
  return std::sqrt(a * b);
}

double harmonic_mean(double a, double b) {
  require_positive(a, b);
  return 2.0 * a * b / (a + b);
}

double logarithmic_mean_p_pow(double p, double a, double b) {
  require_positive(a, b);
  if (p == -1.0 || p == 0.0) {
    throw DomainError("L_p is undefined for p in {-1, 0}, got p = " + format_real(p));
  }
  if (a == b) throw DomainError("L_p requires a != b");
  // (b^(p+1) - a^(p+1)) / (b - a) = a^p (r^(p+1) - 1) / (r - 1), r = b / a,
  // evaluated with expm1/log1p to keep digits when r is close to 1.
  const double lr = std::log1p((b - a) / a);
  return std::pow(a, p) * std::expm1((p + 1.0) * lr) / ((p + 1.0) * ((b - a) / a));
}

double logarithmic_mean_p(double p, double a, double b) {
  return std::pow(logarithmic_mean_p_pow(p, a, b), 1.0 / p);
}

double mean(MeanKind kind, const MeanParams& params) {
  require_positive(params.a, params.b);
  switch (kind) {
    case MeanKind::weighted_arithmetic: return weighted_arithmetic_mean(params.alpha, params.a, params.b);
    case MeanKind::arithmetic: return arithmetic_mean(params.a, params.b);
    case MeanKind::geometric: return geometric_mean(params.a, params.b);
    case MeanKind::harmonic: return harmonic_mean(params.a, params.b);
    case MeanKind::logarithmic_p: return logarithmic_mean_p(params.p, params.a, params.b);
  }
  throw DomainError("unknown mean kind");
}

VerificationReport check_prop31(double a, double b, double alpha, double tolerance) {
  require_prop(a, b, alpha);
  const double w = 1.0 / (alpha + 1.0);
  const double aa = std::pow(a, alpha);
  const double ba = std::pow(b, alpha);
  const double first = weighted_arithmetic_mean(w, aa, ba);
  const double second = weighted_arithmetic_mean(w, ba, aa);
  const double lhs = a * b * logarithmic_mean_p_pow(alpha - 2.0, a, b);

  VerificationReport r;
  r.statement_id = "prop-3.1";
  r.tolerance = tolerance;
  r.inputs = Json{{"a", a}, {"b", b}, {"alpha", alpha}};
  r.set_sides(lhs, second < first ? second : first);
  r.add_term("candidate_a", first);
  r.add_term("candidate_b", second);
  r.add_term("lhs_via_integral", harmonic_integral_mean(make_power(alpha), a, b));
  return r;
}

VerificationReport check_prop32(double a, double b, double alpha, double q, double tolerance) {
  require_prop(a, b, alpha);
  const double k = alpha / q + 1.0;
  BoundOptions options;
  options.tolerance = tolerance;
  return from_bound("prop-3.2", a, b, alpha, q, check_thm23(scaled_power(k), a, b, alpha, 1.0, q, options), k);
}

VerificationReport check_prop33(double a, double b, double alpha, double q, const BoundOptions& options) {
  require_prop(a, b, alpha);
  const double k = alpha / q + 1.0;
  VerificationReport r =
      from_bound("prop-3.3", a, b, alpha, q, check_thm24(scaled_power(k), a, b, alpha, 1.0, q, options), k);
  r.inputs["thm24_factor"] = std::string(to_string(options.thm24_factor));
  return r;
}

VerificationReport check_prop34(double a, double b, double alpha, double q, double p, double tolerance) {
  require_prop(a, b, alpha);
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("require q > 1, got " + format_real(q));
  if (!(std::fabs(1.0 / p + 1.0 / q - 1.0) <= 1e-12)) {
    throw DomainError("p and q must be conjugate (1/p + 1/q = 1), got p = " + format_real(p) +
                      ", q = " + format_real(q));
  }
  const double k = alpha / q + 1.0;
  BoundOptions options;
  options.tolerance = tolerance;
  VerificationReport r =
      from_bound("prop-3.4", a, b, alpha, q, check_thm25(scaled_power(k), a, b, alpha, 1.0, q, options), k);
  r.inputs["p"] = p;
  return r;
}

double conjugate_exponent(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("require q > 1, got " + format_real(q));
  return q / (q - 1.0);
}

VerificationReport check_prop_hypothesis(double a, double b, double alpha, const SampleScheme& scheme) {
  require_prop(a, b, alpha);
  VerificationReport r =
      check_harmonic_am_convex(make_power(alpha), ConvexityParams::make(alpha, 1.0), Interval::closed(a, b), scheme);
  r.statement_id = "hypothesis:prop";
  return r;
}

}  // namespace hhc
