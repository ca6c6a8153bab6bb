#include "suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gcs/cli/corpus.hpp"
#include "gcs/integration.hpp"
#include "gcs/jet.hpp"
#include "gcs/syntax.hpp"
#include "support.hpp"

namespace gcs::suites {
namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.pass) r.detail = what;
  r.pass = false;
}

// Positive on the sampling box, in t, x and u_0..u_{rho-1}.
Expr positive_in_point_jets(std::mt19937_64& gen, int rho) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); };
  auto leaf = [&]() -> Expr {
    const int k = pick(4);
    if (k == 0) return Expr::t();
    if (k == 1) return Expr::x();
    if (k == 2) return Expr::u(pick(rho));
    return Expr(testing::frac(1 + pick(5), 1 + pick(3)));
  };
  Expr e = leaf();
  const int n = 1 + pick(3);
  for (int i = 0; i < n; ++i) {
    switch (pick(4)) {
      case 0:
        e = e + leaf();
        break;
      case 1:
        e = e * leaf();
        break;
      case 2:
        e = e * pow(leaf(), testing::frac(pick(5) - 2, 1 + pick(2)));
        break;
      default:
        e = e * exp(leaf() / Expr(4));
    }
  }
  return e;
}

// Arbitrary sign, in t, x, u_0, u_1.
Expr any_in_first_jets(std::mt19937_64& gen) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); };
  auto leaf = [&]() -> Expr {
    switch (pick(5)) {
      case 0:
        return Expr::t();
      case 1:
        return Expr::x();
      case 2:
        return Expr::u();
      case 3:
        return Expr::u(1);
      default:
        return Expr(testing::frac(pick(9) - 4, 1 + pick(3)));
    }
  };
  Expr e = leaf();
  const int n = 1 + pick(3);
  for (int i = 0; i < n; ++i) e = pick(2) == 0 ? e + leaf() : e * leaf();
  return e;
}

}  // namespace

std::vector<OperatorCase> corpus_operators() {
  std::vector<OperatorCase> out;
  for (const auto& entry : cli::corpus()) {
    const cli::Problem p = cli::corpus_problem(entry.name);
    if (!p.op || !cli::has_equation(p)) continue;
    const SamplePlan plan = cli::sample_plan(p);
    EvolutionEquation eq = cli::build_equation(p, plan);
    GcsOperator op = cli::build_operator(p, &eq, plan);
    out.push_back({p.name, std::move(eq), std::move(op)});
  }
  return out;
}

std::vector<AnsatzCase> corpus_ansatzes() {
  std::vector<AnsatzCase> out;
  for (const auto& entry : cli::corpus()) {
    const cli::Problem p = cli::corpus_problem(entry.name);
    if (!p.ansatz || !cli::has_equation(p)) continue;
    const SamplePlan plan = cli::sample_plan(p);
    out.push_back({p.name, cli::build_equation(p, plan), cli::build_ansatz(p, plan)});
  }
  return out;
}

std::vector<std::pair<Expr, std::string>> corpus_expressions() {
  std::vector<std::pair<Expr, std::string>> out;
  for (const auto& entry : cli::corpus()) {
    const cli::Problem p = cli::corpus_problem(entry.name);
    std::vector<std::string> texts{p.rhs};
    if (p.op) {
      for (const auto* s : {&p.op->eta, &p.op->etacheck, &p.op->tau, &p.op->xi}) texts.push_back(*s);
    }
    if (p.ansatz) texts.push_back(p.ansatz->expr);
    if (p.family) texts.push_back(p.family->expr);
    for (const auto& t : texts) {
      if (!t.empty()) out.emplace_back(parse(t, p.depvar), p.depvar);
    }
  }
  return out;
}

Verdict category(Verdict v) { return v == Verdict::Probable ? Verdict::Symmetry : v; }

SuiteResult three_oracle_agreement() {
  SuiteResult r;
  for (const auto& c : corpus_operators()) {
    ++r.cases;
    const Verdict a = category(check_gcs(c.eq, c.op).verdict);
    const Verdict b = category(check_involutivity(c.eq, c.op).verdict);
    const Verdict d = category(integrability_probe(c.eq, c.op).verdict);
    if (a != b || a != d || a == Verdict::Inconclusive) {
      fail(r, c.name + ": " + to_string(a) + " / " + to_string(b) + " / " + to_string(d));
    }
  }
  return r;
}

SuiteResult multiplier_invariance(int count) {
  SuiteResult r;
  std::mt19937_64 gen(0xC0FFEE);
  for (const auto& c : corpus_operators()) {
    const GcsOperator base = to_canonical(c.op);
    const Verdict expected = category(check_gcs(c.eq, c.op).verdict);
    const Expr eta = c.op.characteristic();
    for (int i = 0; i < count; ++i) {
      ++r.cases;
      const Expr lambda = positive_in_point_jets(gen, base.rho());
      const Verdict got = category(check_gcs(c.eq, GcsOperator::reduced(lambda * eta)).verdict);
      if (got != expected) {
        fail(r, c.name + " with lambda = " + to_string(lambda) + ": " + to_string(got) + " vs " + to_string(expected));
      }
    }
  }
  return r;
}

SuiteResult solution_equivalence_stability(int count) {
  SuiteResult r;
  std::mt19937_64 gen(0xC0FFEE + 1);
  for (const auto& c : corpus_operators()) {
    const Verdict expected = category(check_gcs(c.eq, c.op).verdict);
    const Expr eta = c.op.characteristic();
    for (int i = 0; i < count; ++i) {
      ++r.cases;
      const Expr chi = any_in_first_jets(gen);
      const Expr shifted = eta + chi * c.eq.residual_form();
      const Verdict got = category(check_gcs(c.eq, to_reduced_form(c.eq, shifted)).verdict);
      if (got != expected) fail(r, c.name + " with chi = " + to_string(chi));
    }
  }
  return r;
}

SuiteResult dt_dx_commute(int count) {
  SuiteResult r;
  testing::RandomExpr gen(0xC0FFEE);
  for (int i = 0; i < count; ++i) {
    ++r.cases;
    const Expr e = gen(3);
    const Expr d = total_dt(total_dx(e)) - total_dx(total_dt(e));
    const auto z = is_zero(d);
    if (z.status != ZeroVerdict::Status::ProvenZero) fail(r, "e = " + to_string(e) + ": " + to_string(z.status));
  }
  return r;
}

SuiteResult ranking_axioms(int max_order) {
  SuiteResult r;
  std::vector<DerivKey> keys;
  for (int t = 0; t <= max_order; ++t) {
    for (int x = 0; t + x <= max_order; ++x) keys.push_back({t, x});
  }
  auto name = [](DerivKey k) { return "u_{" + std::to_string(k.t) + "," + std::to_string(k.x) + "}"; };
  for (int order = 1; order <= 4; ++order) {
    for (const auto& a : keys) {
      if (rank_compare(a, {a.t, a.x + 1}, order) >= 0 || rank_compare(a, {a.t + 1, a.x}, order) >= 0) {
        fail(r, name(a) + " is not below its derivatives");
      }
      for (const auto& b : keys) {
        ++r.cases;
        const auto ab = rank_compare(a, b, order);
        const auto ba = rank_compare(b, a, order);
        if ((ab == 0) != (a == b)) fail(r, "equality of " + name(a) + " and " + name(b));
        if ((ab < 0) != (ba > 0)) fail(r, "antisymmetry of " + name(a) + " and " + name(b));
        if (ab < 0) {
          if (rank_compare({a.t, a.x + 1}, {b.t, b.x + 1}, order) >= 0) fail(r, "D_x compatibility " + name(a));
          if (rank_compare({a.t + 1, a.x}, {b.t + 1, b.x}, order) >= 0) fail(r, "D_t compatibility " + name(a));
          for (const auto& c : keys) {
            if (rank_compare(b, c, order) < 0 && rank_compare(a, c, order) >= 0) fail(r, "transitivity " + name(a));
          }
        }
      }
    }
  }
  return r;
}

SuiteResult rk4_order() {
  SuiteResult r;
  ReducedSystem sys{1, {"phi"}, {Expr::param("phi")}};
  std::vector<double> errors;
  for (const int n : {10, 20, 40, 80}) {
    IntegrationPlan plan;
    plan.t0 = 0.0;
    plan.t1 = 1.0;
    plan.step = 1.0 / n;
    plan.initial = {1.0};
    const Trajectory traj = integrate_reduced(sys, plan);
    errors.push_back(std::abs(traj.phi.back()[0] - std::exp(1.0)));
  }
  std::ostringstream os;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    ++r.cases;
    const double factor = errors[i - 1] / errors[i];
    os << (i > 1 ? ", " : "") << factor;
    if (!(factor >= 12.0 && factor <= 20.0)) fail(r, "factor " + std::to_string(factor));
  }
  if (r.pass) r.detail = "factors " + os.str();
  return r;
}

SuiteResult normalization_idempotence(int count) {
  SuiteResult r;
  auto check = [&](const Expr& e) {
    ++r.cases;
    const Expr once = normalize(e);
    if (compare(normalize(once), once) != 0 || compare(once, e) != 0) fail(r, "e = " + to_string(e));
  };
  testing::RandomExpr gen(0xC0FFEE + 2);
  for (int i = 0; i < count; ++i) check(gen(4));
  for (const auto& [e, depvar] : corpus_expressions()) check(e);
  return r;
}

SuiteResult parse_print_round_trip(int count) {
  SuiteResult r;
  auto check = [&](const Expr& e, const std::string& depvar) {
    ++r.cases;
    const std::string text = to_string(e, depvar);
    try {
      if (compare(parse(text, depvar), e) != 0) fail(r, "'" + text + "' reparses differently");
    } catch (const std::exception& ex) {
      fail(r, "'" + text + "': " + ex.what());
    }
  };
  testing::RandomExpr gen(0xC0FFEE + 3);
  for (int i = 0; i < count; ++i) check(gen(4), "u");
  for (const auto& [e, depvar] : corpus_expressions()) check(e, depvar);
  return r;
}

}  // namespace gcs::suites
