#include "hhconvex/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hhconvex/errors.hpp"
#include "hhconvex/rng.hpp"

namespace hhc {

void ConvexityParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + format_real(alpha));
  }
  if (!(m > 0.0 && m <= 1.0)) {
    throw DomainError("m must lie in (0, 1], got " + format_real(m));
  }
}

ConvexityParams ConvexityParams::make(double alpha, double m) {
  ConvexityParams p{alpha, m};
  p.validate();
  return p;
}

void SampleScheme::validate() const {
  if (grid_density < 3) throw DomainError("grid_density must be at least 3");
  if (random_count < 0) throw DomainError("random_count must be nonnegative");
  if (!(slack >= 0.0)) throw DomainError("slack must be nonnegative");
}

double harmonic_am_point(double x, double y, double t, double m) {
  return m * x * y / (m * t * y + (1.0 - t) * x);
}

double am_point(double x, double y, double t, double m) { return t * x + m * (1.0 - t) * y; }

namespace {

enum class Combination { harmonic, affine };

VerificationReport run_checker(const RealFunction& f, const ConvexityParams& params,
                               const Interval& region, const SampleScheme& scheme,
                               Combination kind) {
  params.validate();
  scheme.validate();
  if (!region.bounded() || !(region.lo > 0.0) || !(region.lo <= region.hi)) {
    throw DomainError("sample region must be a bounded positive interval, got " + region.to_string());
  }

  const double lo = region.lo;
  const double hi = region.hi;
  const double alpha = params.alpha;
  const double m = params.m;
  const Interval& domain = f.domain();

  auto point_of = [kind, m](double x, double y, double t) {
    return kind == Combination::harmonic ? harmonic_am_point(x, y, t, m) : am_point(x, y, t, m);
  };
  auto value_at = [&](double p) {
    if (!domain.contains(p)) {
      throw DomainError("sample point " + format_real(p) + " outside the domain " +
                        domain.to_string() + " of " + f.name());
    }
    const double v = f.eval_unchecked(p);
    if (!std::isfinite(v)) {
      throw EvaluationError(f.name() + ": non-finite value at " + format_real(p), p);
    }
    return v;
  };

  long long index = 0;
  long long worst_index = -1;
  double worst_excess = -std::numeric_limits<double>::infinity();
  Counterexample worst{};
  double worst_slack = 0.0;

  auto visit = [&](double x, double y, double t) {
    const double p = point_of(x, y, t);
    const double lhs = value_at(p);
    const double w = std::pow(t, alpha);
    const double rhs = w * value_at(x) + m * (1.0 - w) * value_at(y);
    const double allowance = scheme.slack * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    const double excess = lhs - rhs - allowance;
    if (excess > worst_excess) {
      worst_excess = excess;
      worst_index = index;
      worst = {x, y, t, lhs, rhs};
      worst_slack = allowance;
    }
    ++index;
    return !(scheme.stop_at_first_violation && excess > 0.0);
  };

  const int g = scheme.grid_density;
  auto grid = [g](double a, double b, int i) {
    return i == g - 1 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(g - 1);
  };
  bool running = true;
  for (int i = 0; i < g && running; ++i) {
    const double x = grid(lo, hi, i);
    for (int j = 0; j < g && running; ++j) {
      const double y = grid(lo, hi, j);
      for (int k = 0; k < g && running; ++k) {
        running = visit(x, y, grid(0.0, 1.0, k));
      }
    }
  }
  SeededUniform rng(scheme.seed);
  for (int r = 0; r < scheme.random_count && running; ++r) {
    const double x = rng.uniform(lo, hi);
    const double y = rng.uniform(lo, hi);
    const double t = rng.unit();
    running = visit(x, y, t);
  }

  VerificationReport report;
  report.statement_id = kind == Combination::harmonic ? "harmonic-am-convex" : "am-convex";
  report.tolerance = worst_slack;
  report.set_sides(worst.lhs, worst.rhs);
  report.inputs = {{"function", f.name()},
                   {"alpha", alpha},
                   {"m", m},
                   {"region_lo", lo},
                   {"region_hi", hi},
                   {"grid_density", scheme.grid_density},
                   {"random_count", scheme.random_count},
                   {"seed", scheme.seed},
                   {"slack", scheme.slack}};
  report.add_term("samples", static_cast<double>(index));
  report.add_term("worst_sample_index", static_cast<double>(worst_index));
  if (report.holds) {
    report.notes.push_back("no violation found in " + std::to_string(index) +
                           " samples (sampling can falsify, not certify)");
  } else {
    report.counterexample = worst;
    report.notes.push_back("violation at sample #" + std::to_string(worst_index) + ": x = " +
                           format_real(worst.x) + ", y = " + format_real(worst.y) +
                           ", t = " + format_real(worst.t));
  }
  if (f.uses_finite_differences()) {
    report.notes.push_back("derivative via finite differences");
  }
  return report;
}

}  // namespace

VerificationReport check_harmonic_am_convex(const RealFunction& f, const ConvexityParams& params,
                                            const Interval& region, const SampleScheme& scheme) {
  return run_checker(f, params, region, scheme, Combination::harmonic);
}

VerificationReport check_am_convex(const RealFunction& f, const ConvexityParams& params,
                                   const Interval& region, const SampleScheme& scheme) {
  return run_checker(f, params, region, scheme, Combination::affine);
}

VerificationReport check_bridge_inequality(double x, double y, double t, double m) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("bridge inequality requires x, y > 0");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("bridge inequality requires t in [0, 1]");
  if (!(m > 0.0 && m <= 1.0)) throw DomainError("bridge inequality requires m in (0, 1]");

  VerificationReport report;
  report.statement_id = "eq-2-0";
  const double lhs = harmonic_am_point(x, y, t, m);
  const double rhs = am_point(x, y, t, m);
  report.tolerance = 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  report.set_sides(lhs, rhs);
  // Closed form of the margin, free of the cancellation in rhs - lhs.
  const double d = x - m * y;
  report.add_term("margin_closed_form", t * (1.0 - t) * d * d / (m * t * y + (1.0 - t) * x));
  report.inputs = {{"x", x}, {"y", y}, {"t", t}, {"m", m}};
  return report;
}

RealFunction compose_g(const RealFunction& f, double a, double b, double m) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("compose_g requires a, b > 0");
  if (!(m > 0.0 && m <= 1.0)) throw DomainError("compose_g requires m in (0, 1]");
  if (!(a < m * b)) {
    throw DomainError("compose_g requires a < m b (a = " + format_real(a) +
                      ", m b = " + format_real(m * b) + ")");
  }
  const double scale = m * a * b;
  const double pole = a + m * b;
  auto g = [scale, pole](double x) { return scale / (pole - x); };

  std::optional<RealFunction::Map> derivative;
  if (f.has_derivative()) {
    derivative = [f, g, scale, pole](double x) {
      const double d = pole - x;
      return f.derivative(g(x)) * scale / (d * d);
    };
  }
  return RealFunction("compose_g(" + f.name() + ";" + format_real(a) + "," + format_real(b) + "," +
                          format_real(m) + ")",
                      {a, b, m}, [f, g](double x) { return f(g(x)); }, std::move(derivative),
                      Interval::open(0.0, pole));
}

CompositionEquivalence check_composition_equivalence(const RealFunction& f, double a, double b,
                                                     const ConvexityParams& params,
                                                     const SampleScheme& scheme) {
  const RealFunction composed = compose_g(f, a, b, params.m);
  const Interval region = Interval::closed(a, params.m * b);
  CompositionEquivalence out{check_harmonic_am_convex(f, params, region, scheme),
                             check_am_convex(composed, params, region, scheme), false};
  out.agree = out.harmonic.holds == out.affine.holds;
  return out;
}

}  // namespace hhc
