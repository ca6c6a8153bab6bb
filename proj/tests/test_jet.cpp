#include <gtest/gtest.h>

#include "gcs/errors.hpp"
#include "gcs/jet.hpp"
#include "support.hpp"

namespace gcs {
namespace {

using testing::equivalent;
using testing::P;

bool same(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

TEST(Weight, Values) {
  EXPECT_EQ(weight(DerivKey{0, 3}, 2), 3);
  EXPECT_EQ(weight(DerivKey{1, 0}, 2), 2);
  EXPECT_EQ(weight(DerivKey{2, 1}, 3), 7);
  EXPECT_EQ(weight(P("t*x + 1"), 2), 0);
  EXPECT_EQ(weight(P("u*u_3 + x"), 2), 3);
  EXPECT_EQ(weight(Expr::jet({1, 1}) + Expr::u(2), 2), 3);
}

TEST(Ranking, SecondOrderExample) {
  // u_2 < u_t < u_3 when r = 2.
  EXPECT_TRUE(rank_compare({0, 2}, {1, 0}, 2) < 0);
  EXPECT_TRUE(rank_compare({1, 0}, {0, 3}, 2) < 0);
  EXPECT_TRUE(rank_compare({1, 1}, {1, 1}, 2) == 0);
  EXPECT_TRUE(rank_compare({0, 4}, {2, 0}, 2) < 0);
  EXPECT_TRUE(rank_compare({0, 4}, {1, 2}, 2) < 0);
}

TEST(Ranking, LeadingDerivative) {
  const Expr h = P("u_2 + u*u_1");
  EXPECT_EQ(leading_derivative(Expr::jet({1, 0}) - h, 2), (DerivKey{1, 0}));
  EXPECT_EQ(leading_derivative(Expr::u(3) - P("u_2/x"), 2), (DerivKey{0, 3}));
  EXPECT_FALSE(leading_derivative(P("x + 1"), 2).has_value());
}

TEST(Ranking, Classification) {
  const int rho = 3;
  EXPECT_EQ(classify_derivative({0, rho - 1}, rho), DerivativeClass::Parametric);
  EXPECT_EQ(classify_derivative({0, 0}, rho), DerivativeClass::Parametric);
  EXPECT_EQ(classify_derivative({1, 0}, rho), DerivativeClass::Principal);
  EXPECT_EQ(classify_derivative({0, rho}, rho), DerivativeClass::Principal);
}

TEST(TotalDerivative, Examples) {
  EXPECT_TRUE(same(total_dx(Expr::u()), Expr::u(1)));
  EXPECT_TRUE(same(total_dx(P("u*u_1")), P("u_1^2 + u*u_2")));
  EXPECT_TRUE(same(total_dt(Expr::u()), Expr::jet({1, 0})));
  EXPECT_TRUE(same(total_dt(P("x*u_1")), Expr::x() * Expr::jet({1, 1})));
  EXPECT_TRUE(same(total_dx(P("x^2 + t")), P("2*x")));
}

TEST(TotalDerivative, RepeatedApplicationMatchesComposition) {
  const Expr e = P("x^3*v_3 - 12*x^2*v_2 + 60*x*v_1 - 120*v + 12*x^3", "v");
  const Expr composed = total_dx(total_dx(total_dx(e)));
  EXPECT_TRUE(same(total_dx(e, 3), composed));
  const Expr expected = P("x^3*v_6 - 3*x^2*v_5 + 6*x*v_4 - 6*v_3 + 72", "v");
  EXPECT_TRUE(equivalent(composed, expected));
}

TEST(TotalDerivative, Commute) {
  const Expr e = P("exp(t*u)*u_2 + x^(3/2)*u_1^2 + ln(u + x)");
  EXPECT_TRUE((total_dt(total_dx(e)) - total_dx(total_dt(e))).is_zero());
}

TEST(ReducedDt, Examples) {
  const EvolutionEquation heat(2, P("u_2"));
  EXPECT_TRUE(same(reduced_dt(Expr::u(), heat), Expr::u(2)));
  const EvolutionEquation burgers(2, P("u_2 + u*u_1"));
  EXPECT_TRUE(same(reduced_dt(Expr::u(1), burgers), P("u_3 + u_1^2 + u*u_2")));
  EXPECT_THROW(reduced_dt(Expr::jet({1, 0}), heat), InvalidArgument);
}

TEST(ReducedDt, CriterionFormOnCanonicalManifold) {
  // (eta_t + eta_* H - H_* eta) restricted to D_x^k eta = 0 vanishes for a
  // conditional symmetry and not for the forced-heat counterexample.
  auto criterion = [](const EvolutionEquation& eq, const Expr& eta, const Expr& etacheck, int rho) {
    const Expr lhs = reduced_dt(eta, eq) - apply_frechet(frechet(eq.rhs()), eta);
    Substitution subs;
    Expr s = etacheck;
    const Substitution close{{Symbol::u(rho), etacheck}};
    for (int j = 0; rho + j <= max_x_order(lhs); ++j) {
      if (j > 0) s = substitute(total_dx(s), close);
      subs.emplace(Symbol::u(rho + j), s);
    }
    return substitute(lhs, subs);
  };
  const EvolutionEquation w(2, P("3*w_2 + 3*w_1/x - 3*w/x^2", "w"), "w");
  EXPECT_TRUE(is_zero(criterion(w, P("x^3*w_3 - 3*x*w_1 + 3*w", "w"), P("(3*x*w_1 - 3*w)/x^3", "w"), 3)).zero());
  const EvolutionEquation forced(2, P("u_2 + x"));
  EXPECT_TRUE(is_zero(criterion(forced, Expr::u(1), Expr(0), 1)).nonzero());
}

TEST(Frechet, Coefficients) {
  const auto c = frechet(P("u_2 + u*u_1"));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_TRUE(same(c[0], Expr::u(1)));
  EXPECT_TRUE(same(c[1], Expr::u()));
  EXPECT_TRUE(same(c[2], Expr(1)));
  EXPECT_TRUE(frechet(P("c*x")).empty());
  EXPECT_THROW(frechet(Expr::jet({1, 0})), InvalidArgument);
  EXPECT_TRUE(same(apply_frechet(c, Expr::u(1)), P("u_1^2 + u*u_2 + u_3")));
}

TEST(EliminateT, Examples) {
  const EvolutionEquation heat(2, P("u_2"));
  EXPECT_TRUE(same(eliminate_t_derivatives(Expr::jet({1, 0}), heat), Expr::u(2)));
  EXPECT_TRUE(same(eliminate_t_derivatives(Expr::jet({2, 1}), heat), Expr::u(5)));
  const EvolutionEquation burgers(2, P("u_2 + u*u_1"));
  EXPECT_TRUE(same(eliminate_t_derivatives(Expr::jet({1, 1}), burgers), P("u_3 + u_1^2 + u*u_2")));
  const Expr e = Expr::jet({2, 0}) * Expr::u(1) + Expr::jet({1, 2});
  const Expr once = eliminate_t_derivatives(e, burgers);
  EXPECT_FALSE(has_t_derivatives(once));
  EXPECT_TRUE(same(eliminate_t_derivatives(once, burgers), once));
}

TEST(EliminateT, ReproducesUsualCharacteristic) {
  const EvolutionEquation eq(2, P("v_2 - v^3/x^3 + 9/4*v/x^2", "v"), "v");
  const Expr tau(1);
  const Expr xi = P("3*2^(1/2)/2*v/x^(3/2) - 3/x", "v");
  const Expr eta = P("-3/2*(v^3/x^3 - 3*2^(1/2)/2*v^2/x^(5/2) - v/x^2 + 2*2^(1/2)/x^(3/2))", "v");
  const Expr characteristic = eta - tau * Expr::jet({1, 0}) - xi * Expr::u(1);
  const Expr expected = P(
      "-v_2 - 3*2^(1/2)/2*v*v_1/x^(3/2) + 3/x*v_1 + 9*2^(1/2)/4*v^2/x^(5/2) - v^3/(2*x^3) - 3/4*v/x^2"
      " - 3*2^(1/2)/x^(3/2)",
      "v");
  EXPECT_TRUE(equivalent(eliminate_t_derivatives(characteristic, eq), expected));
}

TEST(RestrictedFrame, Definitions) {
  const EvolutionEquation w(2, P("3*w_2 + 3*w_1/x - 3*w/x^2", "w"), "w");
  const Expr etacheck = P("(3*x*w_1 - 3*w)/x^3", "w");
  const RestrictedFrame frame(w, etacheck, 3);
  EXPECT_TRUE(same(frame.dx(Expr::u(2)), etacheck));
  EXPECT_TRUE(same(frame.dx(Expr::u(1)), Expr::u(2)));
  EXPECT_TRUE(same(frame.hhat(), w.rhs()));
  EXPECT_TRUE(same(restricted_dx(Expr::u(2), w, etacheck, 3), etacheck));
  EXPECT_THROW(frame.dx(Expr::u(3)), InvalidArgument);
  EXPECT_THROW(frame.dt(Expr::jet({1, 0})), InvalidArgument);
  EXPECT_THROW(RestrictedFrame(w, Expr::u(3), 3), InvalidArgument);
}

TEST(RestrictedFrame, HeatWithTrivialConstraint) {
  const EvolutionEquation heat(2, P("u_2"));
  const RestrictedFrame frame(heat, Expr(0), 1);
  EXPECT_TRUE(frame.hhat().is_zero());
  EXPECT_TRUE(same(frame.dx(P("x^2*u")), P("2*x*u")));
  EXPECT_TRUE(restricted_dt(Expr::u(), heat, Expr(0), 1).is_zero());
  EXPECT_TRUE(same(frame.dt(P("t^2 + u")), P("2*t")));
}

TEST(RestrictedFrame, ClosureUnderRepeatedDerivatives) {
  const EvolutionEquation eq(2, P("(v*v_2 - 5/6*v_1^2 + x^2*v_1)/x^2", "v"), "v");
  const Expr etacheck = P("120*v/x^3 - 60*v_1/x^2 + 12*v_2/x - 12", "v");
  const RestrictedFrame frame(eq, etacheck, 3);
  Expr e = P("v*v_2", "v");
  for (int i = 0; i < 4; ++i) {
    e = frame.dx(e);
    EXPECT_LT(max_x_order(e), 3);
    EXPECT_FALSE(has_t_derivatives(e));
  }
  EXPECT_LT(max_x_order(frame.dt(P("v_2", "v"))), 3);
}

TEST(EvolutionEquation, Validation) {
  EXPECT_THROW(EvolutionEquation(0, P("u")), InvalidArgument);
  EXPECT_THROW(EvolutionEquation(2, P("u_3")), InvalidArgument);
  EXPECT_THROW(EvolutionEquation(2, P("u_1")), InvalidArgument);
  EXPECT_THROW(EvolutionEquation(2, Expr::jet({1, 0})), InvalidArgument);
  EXPECT_THROW(EvolutionEquation(2, P("u_2 - u_2")), InvalidArgument);
  EXPECT_NO_THROW(EvolutionEquation(1, P("u*u_1")));
}

}  // namespace
}  // namespace gcs
