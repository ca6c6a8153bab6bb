#include <gtest/gtest.h>

#include <cmath>

#include "gcs/errors.hpp"
#include "gcs/integration.hpp"
#include "gcs/numeric.hpp"
#include "gcs/reduction.hpp"
#include "support.hpp"

namespace gcs {
namespace {

using testing::frac;
using testing::P;

TEST(Eval, Examples) {
  EXPECT_DOUBLE_EQ(eval(P("x^2"), {{Symbol::x(), 2.0}}), 4.0);
  EXPECT_NEAR(eval(P("(2*x)^(1/2)"), {{Symbol::x(), 2.0}}), 2.0, 1e-15);
  EXPECT_NEAR(eval(P("exp(x) + ln(c)"), {{Symbol::x(), 0.0}, {Symbol::param("c"), 1.0}}), 1.0, 1e-15);
}

TEST(Eval, DomainErrors) {
  EXPECT_THROW(eval(P("x^(1/2)"), {{Symbol::x(), -1.0}}), DomainError);
  EXPECT_THROW(eval(P("ln(x)"), {{Symbol::x(), 0.0}}), DomainError);
  EXPECT_THROW(eval(P("1/(x - 1)"), {{Symbol::x(), 1.0}}), DomainError);
  EXPECT_THROW(eval(P("x"), {}), InvalidArgument);
}

TEST(Eval, TwoEvaluationOrdersAgree) {
  // The sl2 constraint solved for v_3 versus the expression it was solved from.
  const Expr etacheck = P("(12*x^2*v_2 - 60*x*v_1 + 120*v - 12*x^3)/x^3", "v");
  const Expr expanded = P("120*v/x^3 - 60*v_1/x^2 + 12*v_2/x - 12", "v");
  const SamplePlan plan;
  for (int i = 0; i < 20; ++i) {
    const Point pt = sample_point(plan, free_symbols(etacheck), i);
    EXPECT_NEAR(eval(etacheck, pt), eval(expanded, pt), 1e-12 * std::max(1.0, std::abs(eval(expanded, pt))));
  }
}

TEST(ZeroTest, ThresholdAtBoxUpperEnd) {
  // 1e-8 * x peaks at 2.5e-8 on [0.5, 2.5], well above 1e-9 * max(1, 2.5).
  const auto v = probabilistic_zero_test(P("x/100000000"));
  EXPECT_EQ(v.status, ZeroVerdict::Status::NonZero);
  const auto tiny = probabilistic_zero_test(P("x/100000000000"));
  EXPECT_EQ(tiny.status, ZeroVerdict::Status::ProbablyZero);
}

TEST(ZeroTest, UnnormalizedIdentityIsProbablyZero) {
  const Expr e = P("(x+1)^2") - P("x^2") - P("2*x") - Expr(1);
  EXPECT_TRUE(e.is_zero());
  const auto v = probabilistic_zero_test(P("((x+1)^3)^(1/3) - x - 1"));
  EXPECT_EQ(v.status, ZeroVerdict::Status::ProbablyZero);
}

TEST(ZeroTest, InconclusiveWhenEveryPointFails) {
  const auto v = probabilistic_zero_test(P("ln(x - 3)"));
  EXPECT_EQ(v.status, ZeroVerdict::Status::Inconclusive);
  EXPECT_GT(v.domain_retries, 0);
}

TEST(ZeroTest, ResamplesAroundDomainErrors) {
  // ln(x - 3/2) is undefined below 1.5; retries find valid points.
  const auto v = probabilistic_zero_test(P("2*ln(x - 3/2) - ln((x - 3/2)^2)"));
  EXPECT_TRUE(v.zero());
  EXPECT_GT(v.domain_retries, 0);
}

TEST(ZeroTest, Deterministic) {
  const Expr e = P("u*x - t^2 + c");
  SamplePlan plan;
  const auto a = probabilistic_zero_test(e, plan);
  const auto b = probabilistic_zero_test(e, plan);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
  EXPECT_EQ(a.witness_value, b.witness_value);
  plan.seed = 7;
  const auto c = probabilistic_zero_test(e, plan);
  EXPECT_NE(*a.witness, *c.witness);
}

TEST(SamplePlan, SharedSymbolsSeeSharedValues) {
  const SamplePlan plan;
  const Point a = sample_point(plan, {Symbol::x(), Symbol::u()}, 3);
  const Point b = sample_point(plan, {Symbol::x(), Symbol::t(), Symbol::u(2)}, 3);
  EXPECT_EQ(a.at(Symbol::x()), b.at(Symbol::x()));
  for (const auto& [s, v] : b) {
    EXPECT_GE(v, 0.5);
    EXPECT_LE(v, 2.5);
  }
}

TEST(SamplePlan, BoxOverrides) {
  SamplePlan plan;
  plan.box[Symbol::x()] = {10.0, 11.0};
  for (int i = 0; i < 10; ++i) {
    const double v = plan.sample(Symbol::x(), i);
    EXPECT_GE(v, 10.0);
    EXPECT_LE(v, 11.0);
  }
}

ReducedSystem system(std::vector<std::string> params, std::vector<std::string> rhs) {
  ReducedSystem s;
  s.rho = static_cast<int>(params.size());
  s.params = std::move(params);
  for (const auto& r : rhs) s.G.push_back(P(r));
  return s;
}

TEST(Integrate, ConstantSystem) {
  const auto tr = integrate_reduced(system({"phi1"}, {"0"}), {1e-3, 0.0, 0.05, {3.0}});
  EXPECT_EQ(tr.t.size(), 51u);
  for (const auto& y : tr.phi) EXPECT_EQ(y[0], 3.0);
}

TEST(Integrate, LinearSystemIsExact) {
  const auto tr = integrate_reduced(system({"psi0", "psi1", "psi2"}, {"0", "24*psi0", "0"}),
                                    {1e-3, 0.0, 0.05, {1.0, 0.0, 1.0}});
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    EXPECT_NEAR(tr.phi[i][1], 24.0 * tr.t[i], 1e-13);
    EXPECT_EQ(tr.phi[i][0], 1.0);
    EXPECT_EQ(tr.phi[i][2], 1.0);
  }
  EXPECT_NEAR(tr.phi.back()[1], 1.2, 1e-13);
}

TEST(Integrate, FourthOrderConvergence) {
  const ReducedSystem s = system({"phi"}, {"phi"});
  double err[3];
  for (int k = 0; k < 3; ++k) {
    const double h = 0.1 / (1 << k);
    const auto tr = integrate_reduced(s, {h, 0.0, 1.0, {1.0}});
    err[k] = std::abs(std::exp(1.0) - tr.phi.back()[0]);
  }
  // Reference errors: 2.0843e-6, 1.3580e-7, 8.6662e-9.
  EXPECT_NEAR(err[0], 2.08432387958e-6, 1e-14);
  EXPECT_NEAR(err[1], 1.35802711278e-7, 1e-14);
  EXPECT_GT(err[0] / err[1], 12.0);
  EXPECT_LT(err[0] / err[1], 20.0);
  EXPECT_GT(err[1] / err[2], 12.0);
  EXPECT_LT(err[1] / err[2], 20.0);
}

TEST(Integrate, Errors) {
  const ReducedSystem s = system({"phi"}, {"phi^2"});
  EXPECT_THROW(integrate_reduced(s, {1e-3, 0.0, 2.0, {10.0}}), IntegrationError);
  EXPECT_THROW(integrate_reduced(s, {0.0, 0.0, 1.0, {1.0}}), IntegrationError);
  EXPECT_THROW(integrate_reduced(s, {1e-3, 1.0, 0.0, {1.0}}), IntegrationError);
  EXPECT_THROW(integrate_reduced(s, {1e-3, 0.0, 1.0, {1.0, 2.0}}), IntegrationError);
  EXPECT_THROW(integrate_reduced(system({"phi"}, {"ln(phi)"}), {1e-3, 0.0, 1.0, {-1.0}}), IntegrationError);
}

TEST(Integrate, Deterministic) {
  const ReducedSystem s = system({"a", "b"}, {"b", "-a + t*b^2/10"});
  const auto ics = seeded_initial_conditions(0xC0FFEE, 2, 1);
  const auto x = integrate_reduced(s, {1e-3, 0.0, 0.5, ics[0]});
  const auto y = integrate_reduced(s, {1e-3, 0.0, 0.5, ics[0]});
  EXPECT_EQ(x.phi, y.phi);
  EXPECT_EQ(seeded_initial_conditions(1, 3, 5), seeded_initial_conditions(1, 3, 5));
  EXPECT_NE(seeded_initial_conditions(1, 3, 5), seeded_initial_conditions(2, 3, 5));
}

class WResidual : public ::testing::Test {
 protected:
  EvolutionEquation eq{2, P("3*w_2 + 3*w_1/x - 3*w/x^2", "w"), "w"};
  Ansatz ansatz{3, P("psi0*x^3 + psi1*x + psi2/x", "w"), {"psi0", "psi1", "psi2"}};
  std::vector<double> xs{0.8, 1.0, 1.3, 1.7, 2.1};
};

TEST_F(WResidual, ExactFamilyHasTinyResidual) {
  const ReductionResult r = reduce(eq, ansatz);
  ASSERT_TRUE(r.reducible);
  const auto tr = integrate_reduced(r.system, {1e-3, 0.0, 0.05, {1.0, 0.0, 1.0}});
  const PdeResidual res = pde_residual(eq, ansatz, tr, xs);
  EXPECT_LT(res.max_residual, 1e-6);
  EXPECT_EQ(res.valid_probes, 5);
}

TEST_F(WResidual, CorruptedSystemIsDetected) {
  ReductionResult r = reduce(eq, ansatz);
  ASSERT_TRUE(r.reducible);
  r.system.G[1] = r.system.G[1] + Expr(frac(1, 100));
  const auto tr = integrate_reduced(r.system, {1e-3, 0.0, 0.05, {1.0, 0.0, 1.0}});
  EXPECT_GT(pde_residual(eq, ansatz, tr, xs).max_residual, 1e-3);
}

TEST_F(WResidual, TooFewValidProbes) {
  const ReductionResult r = reduce(eq, ansatz);
  const auto tr = integrate_reduced(r.system, {1e-3, 0.0, 0.05, {1.0, 0.0, 1.0}});
  EXPECT_THROW(pde_residual(eq, ansatz, tr, {0.0, 0.0, 1.0, 1.5, 2.0}), IntegrationError);
  const PdeResidual res = pde_residual(eq, ansatz, tr, {0.0, 1.0, 1.5, 2.0, 2.5, 3.0});
  EXPECT_EQ(res.skipped_probes, 1);
  EXPECT_EQ(res.valid_probes, 5);
}

}  // namespace
}  // namespace gcs
