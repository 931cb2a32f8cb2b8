#include "hhconvex/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hhconvex/coefficients.hpp"
#include "hhconvex/errors.hpp"
#include "hhconvex/quadrature.hpp"

namespace hhc {

std::string_view to_string(Thm24Factor f) { return f == Thm24Factor::proof ? "proof" : "printed"; }

std::string_view to_string(HypothesisScope s) { return s == HypothesisScope::local ? "local" : "wide"; }

namespace {

void require_interval(double a, double b) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw DomainError("require 0 < a < b < inf, got a = " + format_real(a) + ", b = " + format_real(b));
  }
}

void require_params(double alpha, double m) { ConvexityParams::make(alpha, m); }

void require_q(double q, bool strict) {
  if (!std::isfinite(q) || (strict ? !(q > 1.0) : !(q >= 1.0))) {
    throw DomainError(std::string("q must satisfy ") + (strict ? "q > 1" : "q >= 1") + ", got " +
                      format_real(q));
  }
}

void require_point(const RealFunction& f, double x, const char* label) {
  if (!f.domain().contains(x)) {
    throw DomainError(std::string(label) + " = " + format_real(x) + " lies outside the domain " +
                      f.domain().to_string() + " of " + f.name());
  }
}

QuadratureSpec mean_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  spec.max_subdivisions = 4000;
  return spec;
}

// |f'(x)|^q, recording whether a finite difference was needed.
double derivative_pow(const RealFunction& f, double x, double q, bool& fd) {
  bool used = false;
  const double d = f.derivative(x, &used);
  fd = fd || used;
  return std::pow(std::fabs(d), q);
}

Json base_inputs(const RealFunction& f, double a, double b) {
  return Json{{"function", f.name()}, {"a", a}, {"b", b}};
}

void note_fd(VerificationReport& r, bool fd) {
  if (fd) r.notes.push_back("derivative via finite differences");
}

// Double inequality left <= middle <= right; the binding pair becomes
// (lhs, rhs) and all three values land in `terms`.
void set_double(VerificationReport& r, double left, double middle, double right) {
  r.add_term("left", left);
  r.add_term("middle", middle);
  r.add_term("right", right);
  const double m1 = middle - left;
  const double m2 = right - middle;
  r.add_term("margin_left", m1);
  r.add_term("margin_right", m2);
  if (m1 <= m2) {
    r.set_sides(left, middle);
  } else {
    r.set_sides(middle, right);
  }
}

struct DerivativeBoundSetup {
  TrapezoidError te;
  double fa_q = 0.0;
  double fbm_q = 0.0;
  bool fd = false;
};

DerivativeBoundSetup derivative_setup(const RealFunction& f, double a, double b, double alpha,
                                      double m, double q, bool strict_q) {
  require_interval(a, b);
  require_params(alpha, m);
  require_q(q, strict_q);
  require_point(f, a, "a");
  require_point(f, b, "b");
  require_point(f, b / m, "b/m");
  DerivativeBoundSetup s;
  s.te = trapezoid_error(f, a, b);
  s.fd = s.te.finite_differences;
  s.fa_q = derivative_pow(f, a, q, s.fd);
  s.fbm_q = derivative_pow(f, b / m, q, s.fd);
  return s;
}

VerificationReport derivative_report(const char* id, const RealFunction& f, double a, double b,
                                     double alpha, double m, double q, double tolerance,
                                     const DerivativeBoundSetup& s, double bound) {
  VerificationReport r;
  r.statement_id = id;
  r.tolerance = tolerance;
  r.inputs = base_inputs(f, a, b);
  r.inputs["alpha"] = alpha;
  r.inputs["m"] = m;
  r.inputs["q"] = q;
  r.set_sides(std::fabs(s.te.lhs), bound);
  r.add_term("trapezoid_error", s.te.lhs);
  r.add_term("identity_residual", s.te.residual);
  r.add_term("abs_fprime_a_pow_q", s.fa_q);
  r.add_term("abs_fprime_b_over_m_pow_q", s.fbm_q);
  note_fd(r, s.fd);
  return r;
}

}  // namespace

double harmonic_integral_mean(const RealFunction& f, double a, double b) {
  require_interval(a, b);
  require_point(f, a, "a");
  require_point(f, b, "b");
  const double integral = integrate_value([&f](double x) { return f(x) / (x * x); }, a, b, mean_spec());
  return a * b / (b - a) * integral;
}

TrapezoidError trapezoid_error(const RealFunction& f, double a, double b) {
  const double mean = harmonic_integral_mean(f, a, b);
  TrapezoidError out;
  out.lhs = (f(a) + f(b)) / 2.0 - mean;

  bool fd = false;
  auto integrand = [&](double t) {
    const double u = t * b + (1.0 - t) * a;
    bool used = false;
    const double d = f.derivative(a * b / u, &used);
    fd = fd || used;
    return (1.0 - 2.0 * t) / (u * u) * d;
  };
  const double integral = integrate_value(integrand, 0.0, 1.0, mean_spec().with_breakpoints({0.5}));
  out.rhs = a * b * (b - a) / 2.0 * integral;
  out.residual = std::fabs(out.lhs - out.rhs);
  out.finite_differences = fd;
  return out;
}

VerificationReport check_lemma11(const RealFunction& f, double a, double b, double tolerance) {
  const TrapezoidError te = trapezoid_error(f, a, b);
  VerificationReport r;
  r.statement_id = "lemma-1-1";
  r.tolerance = tolerance * std::max(1.0, std::fabs(te.lhs));
  r.inputs = base_inputs(f, a, b);
  r.set_sides(te.residual, 0.0);
  r.add_term("trapezoid_error", te.lhs);
  r.add_term("integral_form", te.rhs);
  r.add_term("residual", te.residual);
  note_fd(r, te.finite_differences);
  return r;
}

VerificationReport check_classical_hh(const RealFunction& f, double a, double b, double tolerance) {
  require_interval(a, b);
  const double mean = integrate_value([&f](double x) { return f(x); }, a, b, mean_spec()) / (b - a);
  VerificationReport r;
  r.statement_id = "eq-1-1";
  r.tolerance = tolerance;
  r.inputs = base_inputs(f, a, b);
  set_double(r, f((a + b) / 2.0), mean, (f(a) + f(b)) / 2.0);
  return r;
}

VerificationReport check_hh_harmonic(const RealFunction& f, double a, double b, double tolerance) {
  const double mean = harmonic_integral_mean(f, a, b);
  VerificationReport r;
  r.statement_id = "eq-1-4";
  r.tolerance = tolerance;
  r.inputs = base_inputs(f, a, b);
  set_double(r, f(2.0 * a * b / (a + b)), mean, (f(a) + f(b)) / 2.0);
  return r;
}

VerificationReport check_thm22(const RealFunction& f, double a, double b, double alpha, double m,
                               double tolerance) {
  require_interval(a, b);
  require_params(alpha, m);
  require_point(f, a / m, "a/m");
  require_point(f, b / m, "b/m");
  const double mean = harmonic_integral_mean(f, a, b);
  const double first = (f(a) + alpha * m * f(b / m)) / (alpha + 1.0);
  const double second = (f(b) + alpha * m * f(a / m)) / (alpha + 1.0);

  VerificationReport r;
  r.statement_id = "thm-2.2";
  r.tolerance = tolerance;
  r.inputs = base_inputs(f, a, b);
  r.inputs["alpha"] = alpha;
  r.inputs["m"] = m;
  r.set_sides(mean, second < first ? second : first);
  r.add_term("candidate_a", first);
  r.add_term("candidate_b", second);
  r.add_term("harmonic_integral_mean", mean);
  return r;
}

VerificationReport check_thm23(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options) {
  const DerivativeBoundSetup s = derivative_setup(f, a, b, alpha, m, q, false);
  const double lam = lambda_coeff(alpha, q, a, b).value;
  const double mu = mu_coeff(alpha, q, a, b).value;
  const double bracket = lam * s.fa_q + m * mu * s.fbm_q;
  const double bound = a * b * (b - a) / std::pow(2.0, 2.0 - 1.0 / q) * std::pow(bracket, 1.0 / q);
  VerificationReport r = derivative_report("thm-2.3", f, a, b, alpha, m, q, options.tolerance, s, bound);
  r.add_term("lambda", lam);
  r.add_term("mu", mu);
  return r;
}

VerificationReport check_thm24(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options) {
  const DerivativeBoundSetup s = derivative_setup(f, a, b, alpha, m, q, false);
  const double lam1 = lambda_coeff(alpha, 1.0, a, b).value;
  const double mu1 = mu_coeff(alpha, 1.0, a, b).value;
  const double base = options.thm24_factor == Thm24Factor::proof ? lambda_coeff(0.0, 1.0, a, b).value
                                                                  : lambda_coeff(0.0, q, a, b).value;
  const double factor = std::pow(base, 1.0 - 1.0 / q);
  const double bracket = lam1 * s.fa_q + m * mu1 * s.fbm_q;
  const double bound = a * b * (b - a) / 2.0 * factor * std::pow(bracket, 1.0 / q);
  VerificationReport r = derivative_report("thm-2.4", f, a, b, alpha, m, q, options.tolerance, s, bound);
  r.inputs["thm24_factor"] = std::string(to_string(options.thm24_factor));
  r.add_term("leading_factor", factor);
  r.add_term("lambda_q1", lam1);
  r.add_term("mu_q1", mu1);
  if (options.thm24_factor == Thm24Factor::printed) {
    r.notes.push_back("leading factor lambda(0,q)^(1-1/q) is not a valid bound in general");
  }
  return r;
}

VerificationReport check_thm25(const RealFunction& f, double a, double b, double alpha, double m,
                               double q, const BoundOptions& options) {
  const DerivativeBoundSetup s = derivative_setup(f, a, b, alpha, m, q, true);
  const double p = q / (q - 1.0);
  const double nu_a = nu_coeff(alpha, q, a, b).value;
  const double nu_0 = nu_coeff(0.0, q, a, b).value;
  const double sum = nu_a * s.fa_q + m * (nu_0 - nu_a) * s.fbm_q;
  const double bound =
      a * b * (b - a) / 2.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) * std::pow(sum, 1.0 / q);
  VerificationReport r = derivative_report("thm-2.5", f, a, b, alpha, m, q, options.tolerance, s, bound);
  r.add_term("p", p);
  r.add_term("nu_alpha", nu_a);
  r.add_term("nu_0", nu_0);
  return r;
}

double bound_lambda123(const RealFunction& f, double a, double b, double q) {
  require_interval(a, b);
  require_q(q, false);
  const Lambda123 l = lambda123(a, b);
  bool fd = false;
  const double bracket = l.lambda2.value * derivative_pow(f, a, q, fd) +
                         l.lambda3.value * derivative_pow(f, b, q, fd);
  return a * b * (b - a) / 2.0 * std::pow(l.lambda1.value, 1.0 - 1.0 / q) * std::pow(bracket, 1.0 / q);
}

double bound_mu12(const RealFunction& f, double a, double b, double q) {
  require_interval(a, b);
  require_q(q, true);
  const Mu12 mu = mu12(q, a, b);
  const double p = q / (q - 1.0);
  bool fd = false;
  const double sum = mu.mu1.value * derivative_pow(f, a, q, fd) + mu.mu2.value * derivative_pow(f, b, q, fd);
  return a * b * (b - a) / 2.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) * std::pow(sum, 1.0 / q);
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& inequality_statements() {
  static const std::vector<std::string> ids{"eq-1-1", "eq-1-4", "lemma-1-1", "thm-2.2",
                                            "thm-2.3", "thm-2.4", "thm-2.5"};
  return ids;
}

VerificationReport check_hypothesis(const RealFunction& f, const HypothesisRequest& req) {
  const std::string& id = req.statement_id;
  const auto& known = inequality_statements();
  if (std::find(known.begin(), known.end(), id) == known.end()) {
    throw std::invalid_argument("unknown statement id '" + id + "'");
  }
  require_interval(req.a, req.b);

  if (id == "lemma-1-1") {
    VerificationReport r;
    r.statement_id = "hypothesis:" + id;
    r.inputs = base_inputs(f, req.a, req.b);
    r.set_sides(0.0, 0.0);
    r.notes.push_back("no convexity hypothesis");
    return r;
  }

  const bool fixed_params = id == "eq-1-1" || id == "eq-1-4";
  const ConvexityParams params =
      fixed_params ? ConvexityParams{1.0, 1.0} : ConvexityParams::make(req.alpha, req.m);
  const double hi = fixed_params ? req.b : req.b / params.m;
  const Interval region = req.scope == HypothesisScope::local ? Interval::closed(req.a, hi)
                                                             : Interval::closed(req.a / 2.0, 2.0 * hi);

  VerificationReport r;
  std::string target = f.name();
  if (id == "eq-1-1") {
    r = check_am_convex(f, params, region, req.scheme);
  } else if (id == "eq-1-4" || id == "thm-2.2") {
    r = check_harmonic_am_convex(f, params, region, req.scheme);
  } else {
    const bool strict = id == "thm-2.5";
    require_q(req.q, strict);
    const RealFunction g = derivative_power(f, req.q);
    target = g.name();
    r = check_harmonic_am_convex(g, params, region, req.scheme);
  }
  r.statement_id = "hypothesis:" + id;
  r.inputs["target"] = target;
  r.inputs["scope"] = std::string(to_string(req.scope));
  return r;
}

VerificationReport evaluate_statement(std::string_view id, const RealFunction& f,
                                      const StatementInputs& in, const BoundOptions& options) {
  if (id == "eq-1-1") return check_classical_hh(f, in.a, in.b, options.tolerance);
  if (id == "eq-1-4") return check_hh_harmonic(f, in.a, in.b, options.tolerance);
  if (id == "lemma-1-1") return check_lemma11(f, in.a, in.b, options.tolerance);
  if (id == "thm-2.2") return check_thm22(f, in.a, in.b, in.alpha, in.m, options.tolerance);
  if (id == "thm-2.3") return check_thm23(f, in.a, in.b, in.alpha, in.m, in.q, options);
  if (id == "thm-2.4") return check_thm24(f, in.a, in.b, in.alpha, in.m, in.q, options);
  if (id == "thm-2.5") return check_thm25(f, in.a, in.b, in.alpha, in.m, in.q, options);
  throw std::invalid_argument("unknown statement id '" + std::string(id) + "'");
}

}  // namespace hhc
