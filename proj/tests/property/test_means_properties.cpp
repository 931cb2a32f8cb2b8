#include <gtest/gtest.h>

#include <cmath>

#include "gauss_legendre.hpp"
#include "hhconvex/means.hpp"
#include "hhconvex/rng.hpp"

namespace hhc {
namespace {

TEST(MeansProperty, HarmonicGeometricArithmeticChain) {
  SeededUniform rng(501);
  for (int i = 0; i < 5000; ++i) {
    const double a = rng.uniform(0.01, 100.0);
    const double b = rng.uniform(0.01, 100.0);
    const double h = harmonic_mean(a, b);
    const double g = geometric_mean(a, b);
    const double m = arithmetic_mean(a, b);
    EXPECT_LE(h, g * (1 + 1e-15));
    EXPECT_LE(g, m * (1 + 1e-15));
    if (std::fabs(a - b) > 1e-6 * std::max(a, b)) {
      EXPECT_LT(h, g);
      EXPECT_LT(g, m);
    }
  }
  for (double a : {0.3, 1.0, 7.0}) {
    EXPECT_DOUBLE_EQ(harmonic_mean(a, a), a);
    EXPECT_DOUBLE_EQ(geometric_mean(a, a), a);
    EXPECT_DOUBLE_EQ(arithmetic_mean(a, a), a);
  }
}

TEST(MeansProperty, LogarithmicMeanNondecreasingInP) {
  SeededUniform rng(502);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.1, 10.0);
    const double b = a + rng.uniform(0.01, 10.0);
    double prev = 0.0;
    for (double p = -4.0; p <= 4.0; p += 0.125) {
      if (std::fabs(p) < 1e-9 || std::fabs(p + 1.0) < 1e-9) continue;
      const double v = logarithmic_mean_p(p, a, b);
      EXPECT_GE(v, prev * (1 - 1e-13)) << a << " " << b << " " << p;
      EXPECT_GT(v, a);
      EXPECT_LT(v, b);
      prev = v;
    }
  }
}

TEST(MeansProperty, PropositionOneLhsIsHarmonicIntegralMean) {
  SeededUniform rng(503);
  for (int i = 0; i < 300; ++i) {
    const double a = rng.uniform(0.1, 5.0);
    const double b = a + rng.uniform(0.01, 5.0);
    const double alpha = rng.uniform(0.01, 0.99);
    const double lhs = a * b * logarithmic_mean_p_pow(alpha - 2.0, a, b);
    EXPECT_LE(testing::rel_diff(lhs, harmonic_integral_mean(make_power(alpha), a, b)), 1e-10);
  }
}

TEST(MeansProperty, Prop31CandidatesMatchThm22) {
  SeededUniform rng(504);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0.1, 5.0);
    const double b = a + rng.uniform(0.01, 5.0);
    const double alpha = rng.uniform(0.01, 0.99);
    const auto r = check_prop31(a, b, alpha);
    const auto t = check_thm22(make_power(alpha), a, b, alpha, 1.0);
    EXPECT_NEAR(*r.term("candidate_a"), *t.term("candidate_a"), 1e-14);
    EXPECT_NEAR(*r.term("candidate_b"), *t.term("candidate_b"), 1e-14);
  }
}

// prop-3.3 is excluded: its hypothesis fails for x^alpha and counterexamples
// exist (see the unit tests).
TEST(MeansProperty, HolderBoundPropositionsHold) {
  SeededUniform rng(505);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(0.1, 5.0);
    const double b = a + rng.uniform(0.01, 5.0);
    const double alpha = rng.uniform(0.01, 0.99);
    const double q = rng.uniform(1.0, 4.0);
    EXPECT_GE(check_prop32(a, b, alpha, q).margin, -1e-9) << a << " " << b << " " << alpha << " " << q;
    if (q > 1.0) {
      EXPECT_GE(check_prop34(a, b, alpha, q, conjugate_exponent(q)).margin, -1e-9)
          << a << " " << b << " " << alpha << " " << q;
    }
  }
}

TEST(MeansProperty, ReductionToTrapezoidErrorIsExact) {
  SeededUniform rng(506);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0.2, 4.0);
    const double b = a + rng.uniform(0.05, 4.0);
    const double alpha = rng.uniform(0.01, 0.99);
    const double q = rng.uniform(1.0, 3.0);
    const auto r = check_prop32(a, b, alpha, q);
    EXPECT_NEAR(r.lhs, *r.term("lhs_via_integral"), 1e-12 * std::max(1.0, r.lhs));
  }
}

}  // namespace
}  // namespace hhc
