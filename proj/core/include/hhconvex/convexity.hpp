#pragma once

#include <cstdint>

#include "hhconvex/function.hpp"
#include "hhconvex/report.hpp"

namespace hhc {

/// The pair (alpha, m) with alpha in [0, 1] and m in (0, 1].
struct ConvexityParams {
  double alpha = 1.0;
  double m = 1.0;

  /// Throws DomainError outside the admissible ranges.
  static ConvexityParams make(double alpha, double m);
  void validate() const;
};

/// How a sampling checker explores (x, y, t): the full tensor grid with
/// `grid_density` points per axis (endpoints included) followed by
/// `random_count` seeded uniform triples.
///
/// A sample counts as violating only when lhs - rhs exceeds
/// slack * max(1, |lhs|, |rhs|).
struct SampleScheme {
  int grid_density = 33;
  int random_count = 10000;
  std::uint64_t seed = 0;
  double slack = 1e-12;
  /// Stop at the first violating sample instead of searching for the worst.
  bool stop_at_first_violation = false;

  void validate() const;
  long long sample_count() const {
    return static_cast<long long>(grid_density) * grid_density * grid_density + random_count;
  }
};

/// m x y / (m t y + (1 - t) x), the harmonic (alpha, m) interpolation point.
/// Equal to 1 / (t / x + (1 - t) / (m y)).
double harmonic_am_point(double x, double y, double t, double m);

/// t x + m (1 - t) y.
double am_point(double x, double y, double t, double m);

/// Samples f(harmonic_am_point(x, y, t, m)) <= t^a f(x) + m (1 - t^a) f(y)
/// for x, y in `region` and t in [0, 1].
///
/// Sampling can only falsify: holds == true means no violation was found.
/// On failure the report carries the worst violating (x, y, t). Throws
/// DomainError when a sampled point falls outside f's domain (this includes
/// m y at t = 0; nothing is clamped).
VerificationReport check_harmonic_am_convex(const RealFunction& f, const ConvexityParams& params,
                                            const Interval& region, const SampleScheme& scheme);

/// Same semantics for f(t x + m (1 - t) y) <= t^a f(x) + m (1 - t^a) f(y).
VerificationReport check_am_convex(const RealFunction& f, const ConvexityParams& params,
                                   const Interval& region, const SampleScheme& scheme);

/// m x y / (m t y + (1 - t) x) <= t x + m (1 - t) y, which holds because
/// the difference is t (1 - t) (x - m y)^2 / (m t y + (1 - t) x).
VerificationReport check_bridge_inequality(double x, double y, double t, double m);

/// x -> f(m a b / (a + m b - x)). The map g sends [a, m b] onto itself and
/// fixes both ends. The returned function is defined on
/// (0, a + m b), the natural domain of g, so affine combinations that leave
/// [a, m b] can still be evaluated. Requires a < m b.
RealFunction compose_g(const RealFunction& f, double a, double b, double m);

struct CompositionEquivalence {
  VerificationReport harmonic;  ///< f harmonically (alpha, m)-convex on [a, m b]
  VerificationReport affine;    ///< f o g (alpha, m)-convex on [a, m b]
  bool agree = false;
};

/// Runs both checkers over the same region [a, m b] and sample scheme.
CompositionEquivalence check_composition_equivalence(const RealFunction& f, double a, double b,
                                                     const ConvexityParams& params,
                                                     const SampleScheme& scheme);

}  // namespace hhc
