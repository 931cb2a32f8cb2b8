#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gauss_legendre.hpp"
#include "hhconvex/coefficients.hpp"
#include "hhconvex/errors.hpp"
#include "hhconvex/inequalities.hpp"

namespace hhc {
namespace {

using testing::rel_diff;

const double kLn2 = std::log(2.0);

TEST(HarmonicIntegralMean, Examples) {
  EXPECT_NEAR(harmonic_integral_mean(make_identity(), 1, 2), 2 * kLn2, 1e-14);
  EXPECT_NEAR(harmonic_integral_mean(make_constant(3.5), 1, 7), 3.5, 1e-14);
  EXPECT_NEAR(harmonic_integral_mean(make_square(), 1, 2), 2.0, 1e-14);
}

TEST(HarmonicIntegralMean, MatchesGaussLegendre) {
  const RealFunction f = make_exp();
  const double ref = 0.5 * 3.0 / 2.5 * testing::gl_integrate([](double x) { return std::exp(x) / (x * x); }, 0.5, 3.0);
  EXPECT_LE(rel_diff(harmonic_integral_mean(f, 0.5, 3.0), ref), 1e-12);
}

TEST(HhHarmonic, Examples) {
  const auto r = check_hh_harmonic(make_identity(), 1, 2);
  EXPECT_NEAR(*r.term("left"), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(*r.term("middle"), 2 * kLn2, 1e-14);
  EXPECT_NEAR(*r.term("right"), 1.5, 1e-15);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.statement_id, "eq-1-4");

  const auto c = check_hh_harmonic(make_constant(2.0), 1, 5);
  EXPECT_NEAR(c.margin, 0.0, 1e-14);
  EXPECT_TRUE(c.holds);

  const auto s = check_hh_harmonic(make_square(), 1, 2);
  EXPECT_NEAR(*s.term("left"), 16.0 / 9.0, 1e-14);
  EXPECT_NEAR(*s.term("middle"), 2.0, 1e-14);
  EXPECT_NEAR(*s.term("right"), 2.5, 1e-14);
  EXPECT_NEAR(s.margin, 2.0 - 16.0 / 9.0, 1e-14);
}

TEST(HhHarmonic, ConcaveFunctionViolates) {
  EXPECT_FALSE(check_hh_harmonic(make_neg_identity(), 1, 2).holds);
}

TEST(ClassicalHh, Examples) {
  const auto r = check_classical_hh(make_square(), 1, 2);
  EXPECT_NEAR(*r.term("left"), 2.25, 1e-15);
  EXPECT_NEAR(*r.term("middle"), 7.0 / 3.0, 1e-14);
  EXPECT_NEAR(*r.term("right"), 2.5, 1e-15);
  EXPECT_TRUE(r.holds);

  const auto l = check_classical_hh(make_identity(), 1, 3);
  EXPECT_NEAR(l.margin, 0.0, 1e-14);
  EXPECT_TRUE(l.holds);

  // The positive-axis stand-in for e^x on (0, 1).
  const auto e = check_classical_hh(make_exp(), 1.0, 2.0);
  EXPECT_NEAR(*e.term("left"), std::exp(1.5), 1e-13);
  EXPECT_NEAR(*e.term("middle"), std::exp(2.0) - std::exp(1.0), 1e-13);
  EXPECT_NEAR(*e.term("right"), (std::exp(1.0) + std::exp(2.0)) / 2, 1e-13);
  EXPECT_TRUE(e.holds);
}

TEST(Thm22, ReducesToEndpointAverage) {
  const auto r = check_thm22(make_identity(), 1, 2, 1, 1);
  EXPECT_DOUBLE_EQ(r.rhs, 1.5);
  EXPECT_NEAR(r.lhs, 2 * kLn2, 1e-14);
  EXPECT_TRUE(r.holds);
}

TEST(Thm22, EqualityAnchor) {
  const auto r = check_thm22(make_power(0.5), 1, 4, 0.5, 1);
  EXPECT_NEAR(r.lhs, 4.0 / 3.0, 1e-13);
  EXPECT_NEAR(r.rhs, 4.0 / 3.0, 1e-15);
  EXPECT_LE(std::fabs(r.lhs - r.rhs), 1e-9);
  EXPECT_NEAR(*r.term("candidate_a"), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(*r.term("candidate_b"), 5.0 / 3.0, 1e-15);
  EXPECT_TRUE(r.holds);
}

TEST(Thm22, TieSelectsFirstCandidate) {
  const auto r = check_thm22(make_identity(), 1, 2, 1, 0.5);
  EXPECT_DOUBLE_EQ(*r.term("candidate_a"), 1.5);
  EXPECT_DOUBLE_EQ(*r.term("candidate_b"), 1.5);
  EXPECT_DOUBLE_EQ(r.rhs, 1.5);
  EXPECT_TRUE(r.holds);
}

TEST(Thm22, PointsOutsideDomain) {
  const RealFunction f("sq[1,3]", {}, [](double x) { return x * x; }, [](double x) { return 2 * x; },
                       Interval::closed(1.0, 3.0));
  EXPECT_THROW(check_thm22(f, 1.0, 2.0, 1.0, 0.5), DomainError);  // b/m = 4
  EXPECT_THROW(check_thm22(make_identity(), 2.0, 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(check_thm22(make_identity(), 1.0, 2.0, 1.0, 0.0), DomainError);
}

TEST(TrapezoidError, Examples) {
  const auto c = trapezoid_error(make_constant(4.0), 1, 3);
  EXPECT_NEAR(c.lhs, 0.0, 1e-14);
  EXPECT_NEAR(c.rhs, 0.0, 1e-15);

  const auto i = trapezoid_error(make_identity(), 1, 2);
  EXPECT_NEAR(i.lhs, 1.5 - 2 * kLn2, 1e-14);
  EXPECT_LE(i.residual, 1e-9);

  const auto s = trapezoid_error(make_square(), 1, 2);
  EXPECT_NEAR(s.lhs, 0.5, 1e-14);
  EXPECT_LE(s.residual, 1e-9);
  EXPECT_FALSE(s.finite_differences);
}

TEST(Lemma11, ReportShape) {
  const auto r = check_lemma11(make_power(1.0), 1, 2);
  EXPECT_EQ(r.statement_id, "lemma-1-1");
  EXPECT_TRUE(r.holds);
  EXPECT_LE(*r.term("residual"), 1e-9);
  EXPECT_EQ(r.rhs, 0.0);
}

TEST(Lemma11, FiniteDifferenceFallbackIsNoted) {
  const RealFunction f("cube", {}, [](double x) { return x * x * x; }, std::nullopt, Interval::positive_reals());
  const auto r = check_lemma11(f, 1, 2, 1e-6);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_EQ(r.notes.back(), "derivative via finite differences");
  EXPECT_TRUE(r.holds);
}

TEST(Thm23, ReducesToLambda1) {
  const auto r = check_thm23(make_identity(), 1, 2, 1, 1, 1);
  EXPECT_LE(rel_diff(r.rhs, lambda123(1, 2).lambda1.value), 1e-13);
  EXPECT_NEAR(r.lhs, 1.5 - 2 * kLn2, 1e-14);
  EXPECT_TRUE(r.holds);
}

TEST(Thm23, ConstantHasZeroLhs) {
  const auto r = check_thm23(make_constant(1.0), 1, 2, 0.5, 0.8, 2);
  EXPECT_NEAR(r.lhs, 0.0, 1e-14);
  EXPECT_TRUE(r.holds);
}

TEST(Thm23, PowerPipeline) {
  const auto r = check_thm23(make_power(1.25), 1, 3, 0.5, 1, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.margin, 0.0);
}

TEST(Thm23, UnitMReductionUsesFPrimeAtB) {
  const auto r = check_thm23(make_square(), 1, 3, 0.5, 1, 2);
  EXPECT_DOUBLE_EQ(*r.term("abs_fprime_b_over_m_pow_q"), 36.0);
  EXPECT_DOUBLE_EQ(*r.term("abs_fprime_a_pow_q"), 4.0);
}

TEST(Thm24, ReducesToLambda123Bound) {
  for (double q : {1.0, 1.5, 2.0, 3.0}) {
    for (const char* name : {"identity", "square", "pow:0.5", "exp"}) {
      const RealFunction f = parse_function(name);
      const auto r = check_thm24(f, 1, 2, 1, 1, q);
      EXPECT_LE(rel_diff(r.rhs, bound_lambda123(f, 1, 2, q)), 1e-10) << name << " q = " << q;
    }
  }
}

TEST(Thm24, IdentityPipeline) {
  const auto r = check_thm24(make_identity(), 1, 2, 0.5, 1, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_GT(r.margin, 0.0);
  EXPECT_EQ(r.inputs["thm24_factor"], "proof");
}

TEST(Thm24, ConstantHasZeroLhs) {
  EXPECT_TRUE(check_thm24(make_constant(0.0), 1, 2, 0.2, 0.7, 1.5).holds);
}

// The leading factor lambda(0, q)^(1 - 1/q) fails for f(x) = x on (2, 4)
// with alpha = m = 1, q = 2, although |f'|^2 = 1 satisfies every hypothesis.
// Hoelder's inequality applied to |1 - 2t| u^-2 |f'|^q produces lambda(0, 1).
TEST(Thm24, PrintedFactorIsNotABound) {
  BoundOptions printed;
  printed.thm24_factor = Thm24Factor::printed;
  const auto bad = check_thm24(make_identity(), 2, 4, 1, 1, 2, printed);
  EXPECT_FALSE(bad.holds);
  EXPECT_NEAR(bad.lhs, 3.0 - 4.0 * kLn2, 1e-13);
  EXPECT_LT(bad.rhs, 0.2129);
  EXPECT_EQ(bad.inputs["thm24_factor"], "printed");
  EXPECT_FALSE(bad.notes.empty());

  const auto good = check_thm24(make_identity(), 2, 4, 1, 1, 2);
  EXPECT_TRUE(good.holds);
  EXPECT_GT(good.margin, 0.3);
}

TEST(Thm25, ReducesToMu12Bound) {
  for (double q : {1.5, 2.0, 3.0}) {
    const auto r = check_thm25(make_identity(), 1, 2, 1, 1, q);
    EXPECT_LE(rel_diff(r.rhs, bound_mu12(make_identity(), 1, 2, q)), 1e-10) << q;
  }
}

TEST(Thm25, IdentityExample) {
  const auto r = check_thm25(make_identity(), 1, 2, 1, 1, 2);
  const double nu0 = nu_coeff(0, 2, 1, 2).value;
  EXPECT_NEAR(r.rhs, 2.0 / 2.0 * std::sqrt(1.0 / 3.0) * std::sqrt(nu0), 1e-14);
  EXPECT_DOUBLE_EQ(*r.term("p"), 2.0);
  EXPECT_TRUE(r.holds);
}

TEST(Thm25, RequiresQAboveOne) {
  EXPECT_THROW(check_thm25(make_identity(), 1, 2, 1, 1, 1.0), DomainError);
  EXPECT_THROW(check_thm25(make_identity(), 1, 2, 1, 1, 0.5), DomainError);
  EXPECT_NO_THROW(check_thm23(make_identity(), 1, 2, 1, 1, 1.0));
  EXPECT_THROW(check_thm23(make_identity(), 1, 2, 1, 1, 0.9), DomainError);
  EXPECT_NO_THROW(check_thm25(make_constant(0.0), 1, 2, 1, 1, 2.0));
}

TEST(Hypothesis, Dispatch) {
  HypothesisRequest req;
  req.scheme.grid_density = 9;
  req.scheme.random_count = 200;

  req.statement_id = "thm-2.2";
  EXPECT_FALSE(check_hypothesis(make_neg_identity(), req).holds);
  EXPECT_TRUE(check_hypothesis(make_identity(), req).holds);

  req.statement_id = "lemma-1-1";
  const auto lemma = check_hypothesis(make_neg_identity(), req);
  EXPECT_TRUE(lemma.holds);
  EXPECT_EQ(lemma.statement_id, "hypothesis:lemma-1-1");

  req.statement_id = "thm-2.3";
  req.q = 2;
  const auto d = check_hypothesis(make_square(), req);  // |2x|^2
  EXPECT_TRUE(d.holds);
  EXPECT_EQ(d.inputs["target"], "|d square|^2");
  EXPECT_EQ(d.inputs["scope"], "local");

  req.statement_id = "eq-1-1";
  EXPECT_FALSE(check_hypothesis(make_log(), req).holds);

  req.statement_id = "thm-9";
  EXPECT_THROW(check_hypothesis(make_identity(), req), std::invalid_argument);
}

TEST(Hypothesis, ScopeWidensRegion) {
  HypothesisRequest req;
  req.statement_id = "thm-2.2";
  req.a = 1;
  req.b = 2;
  req.m = 0.5;
  req.scheme.grid_density = 5;
  req.scheme.random_count = 0;
  const auto local = check_hypothesis(make_constant(0.0), req);
  EXPECT_EQ(local.inputs["region_lo"], 1.0);
  EXPECT_EQ(local.inputs["region_hi"], 4.0);
  req.scope = HypothesisScope::wide;
  const auto wide = check_hypothesis(make_constant(0.0), req);
  EXPECT_EQ(wide.inputs["region_lo"], 0.5);
  EXPECT_EQ(wide.inputs["region_hi"], 8.0);
}

TEST(EvaluateStatement, DispatchesEveryId) {
  for (const auto& id : inequality_statements()) {
    const auto r = evaluate_statement(id, make_identity(), {1, 2, 1, 1, 2});
    EXPECT_EQ(r.statement_id, id);
    EXPECT_TRUE(r.holds) << id;
  }
  EXPECT_THROW(evaluate_statement("prop-3.1", make_identity(), {}), std::invalid_argument);
}

TEST(EvaluateStatement, ToleranceIsRespected) {
  BoundOptions loose;
  loose.tolerance = 1.0;
  EXPECT_TRUE(evaluate_statement("eq-1-4", make_neg_identity(), {1, 2, 1, 1, 1}, loose).holds);
  EXPECT_EQ(evaluate_statement("thm-2.2", make_identity(), {1, 2, 1, 1, 1}, loose).tolerance, 1.0);
}

}  // namespace
}  // namespace hhc
