#include "hhconvex/coefficients.hpp"

#include <cmath>
#include <limits>

#include "hhconvex/errors.hpp"
#include "hhconvex/function.hpp"
#include "hhconvex/quadrature.hpp"
#include "hhconvex/specfun.hpp"

namespace hhc {

std::string_view to_string(Provenance p) {
  return p == Provenance::closed_form ? "closed-form" : "quadrature-oracle";
}

namespace {

void require_interval(double a, double b) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw DomainError("coefficients require 0 < a < b < inf, got a = " + format_real(a) +
                      ", b = " + format_real(b));
  }
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + format_real(alpha));
  }
}

void require_q(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw DomainError("q must satisfy 1 <= q < inf, got " + format_real(q));
  }
}

void require_all(double alpha, double q, double a, double b) {
  require_alpha(alpha);
  require_q(q);
  require_interval(a, b);
}

Coefficient make(std::string name, double alpha, double q, double a, double b, double value,
                 Provenance provenance = Provenance::closed_form, double error = 0.0) {
  return Coefficient{std::move(name), alpha, q, a, b, value, provenance, error};
}

QuadratureSpec oracle_spec(bool kink) {
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 4000;
  if (kink) spec.breakpoints = {0.5};
  return spec;
}

double f21(double a, double b, double c, double z) { return gauss_2f1({a, b, c, z}); }

// u(t)^(-2q) with u(t) = t b + (1 - t) a.
struct Weight {
  double a, b, q;
  double operator()(double t) const { return std::pow(t * b + (1.0 - t) * a, -2.0 * q); }
};

Coefficient oracle(std::string name, double alpha, double q, double a, double b,
                   const ScalarFunction& integrand, bool kink) {
  const QuadratureResult r = integrate(integrand, 0.0, 1.0, oracle_spec(kink));
  return make(std::move(name), alpha, q, a, b, r.value, Provenance::quadrature_oracle, r.error);
}

}  // namespace

Coefficient lambda_coeff(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  const double z = 1.0 - a / b;
  const double w = (b - a) / (a + b);
  const double inv_b = std::pow(b, -2.0 * q);
  const double b2 = beta(2.0, alpha + 1.0);
  const double t1 = beta(1.0, alpha + 2.0) * inv_b * f21(2.0 * q, 1.0, alpha + 3.0, z);
  const double t2 = b2 * inv_b * f21(2.0 * q, 2.0, alpha + 3.0, z);
  const double t3 = std::pow(2.0, 2.0 * q - alpha) * b2 * std::pow(a + b, -2.0 * q) *
                    f21(2.0 * q, 2.0, alpha + 3.0, w);
  return make("lambda", alpha, q, a, b, t1 - t2 + t3);
}

Coefficient lambda_coeff_oracle(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  const Weight u{a, b, q};
  return oracle("lambda", alpha, q, a, b,
                [u, alpha](double t) { return std::fabs(1.0 - 2.0 * t) * std::pow(t, alpha) * u(t); },
                true);
}

Coefficient mu_coeff(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  if (alpha == 0.0) return make("mu", alpha, q, a, b, 0.0);
  const double value = lambda_coeff(0.0, q, a, b).value - lambda_coeff(alpha, q, a, b).value;
  return make("mu", alpha, q, a, b, value);
}

Coefficient mu_coeff_oracle(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  const Weight u{a, b, q};
  return oracle("mu", alpha, q, a, b,
                [u, alpha](double t) {
                  return std::fabs(1.0 - 2.0 * t) * (1.0 - std::pow(t, alpha)) * u(t);
                },
                true);
}

Coefficient nu_coeff(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  const double value = beta(1.0, alpha + 1.0) * std::pow(b, -2.0 * q) *
                       f21(2.0 * q, 1.0, alpha + 2.0, 1.0 - a / b);
  return make("nu", alpha, q, a, b, value);
}

Coefficient nu_coeff_oracle(double alpha, double q, double a, double b) {
  require_all(alpha, q, a, b);
  const Weight u{a, b, q};
  return oracle("nu", alpha, q, a, b, [u, alpha](double t) { return std::pow(t, alpha) * u(t); },
                false);
}

Lambda123 lambda123(double a, double b) {
  require_interval(a, b);
  const double d = b - a;
  if (d < kLambda123DegenerateWidth * a) return lambda123_oracle(a, b);
  // ln((a + b)^2 / (4ab)) = ln(1 + (b - a)^2 / (4ab))
  const double log_term = std::log1p(d * d / (4.0 * a * b));
  const double l1 = 1.0 / (a * b) - 2.0 * log_term / (d * d);
  const double l2 = -1.0 / (b * d) + (3.0 * a + b) * log_term / (d * d * d);
  return {make("lambda1", 0.0, 1.0, a, b, l1), make("lambda2", 1.0, 1.0, a, b, l2),
          make("lambda3", 1.0, 1.0, a, b, l1 - l2)};
}

Lambda123 lambda123_oracle(double a, double b) {
  require_interval(a, b);
  Coefficient l1 = lambda_coeff_oracle(0.0, 1.0, a, b);
  Coefficient l2 = lambda_coeff_oracle(1.0, 1.0, a, b);
  Coefficient l3 = mu_coeff_oracle(1.0, 1.0, a, b);
  l1.name = "lambda1";
  l2.name = "lambda2";
  l3.name = "lambda3";
  return {l1, l2, l3};
}

double lambda3_direct(double a, double b) {
  require_interval(a, b);
  const double d = b - a;
  const double log_term = std::log1p(d * d / (4.0 * a * b));
  return 1.0 / (a * d) - (3.0 * b + a) * log_term / (d * d * d);
}

Mu12 mu12(double q, double a, double b) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("mu12 requires q > 1: the factor (1 - q) in its denominator vanishes at q = 1 (got q = " +
                      format_real(q) + ")");
  }
  require_interval(a, b);
  const double d = b - a;
  if (d < kMu12DegenerateWidth * a) return mu12_oracle(q, a, b);
  const double k = 1.0 - 2.0 * q;
  const double denom = 2.0 * d * d * (1.0 - q) * k;
  const double m1 = (std::pow(a, 2.0 - 2.0 * q) + std::pow(b, k) * (d * k - a)) / denom;
  const double m2 = (std::pow(b, 2.0 - 2.0 * q) - std::pow(a, k) * (d * k + b)) / denom;
  return {make("mu1", 1.0, q, a, b, m1), make("mu2", 0.0, q, a, b, m2)};
}

Mu12 mu12_oracle(double q, double a, double b) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("mu12 requires q > 1, got " + format_real(q));
  }
  require_interval(a, b);
  const Weight u{a, b, q};
  return {oracle("mu1", 1.0, q, a, b, [u](double t) { return t * u(t); }, false),
          oracle("mu2", 0.0, q, a, b, [u](double t) { return (1.0 - t) * u(t); }, false)};
}

OracleComparison compare_with_oracle(const Coefficient& closed, const Coefficient& oracle_value,
                                     double rel_tol) {
  OracleComparison out;
  out.closed_form = closed.value;
  out.oracle = oracle_value.value;
  const double diff = std::fabs(closed.value - oracle_value.value);
  if (diff == 0.0) {
    out.relative_difference = 0.0;
  } else if (oracle_value.value == 0.0) {
    out.relative_difference = std::numeric_limits<double>::infinity();
  } else {
    out.relative_difference = diff / std::fabs(oracle_value.value);
  }
  out.agree = diff <= rel_tol * std::fmax(1.0, std::fabs(closed.value));
  return out;
}

}  // namespace hhc
