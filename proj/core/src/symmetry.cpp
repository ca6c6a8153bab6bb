#include "gcs/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gcs/errors.hpp"
#include "gcs/jet.hpp"

namespace gcs {

namespace {

Verdict verdict_of(const ZeroVerdict& z) {
  switch (z.status) {
    case ZeroVerdict::Status::ProvenZero:
      return Verdict::Symmetry;
    case ZeroVerdict::Status::ProbablyZero:
      return Verdict::Probable;
    case ZeroVerdict::Status::NonZero:
      return Verdict::NotSymmetry;
    case ZeroVerdict::Status::Inconclusive:
      return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

CheckResult finish(std::string method, Expr residual, const SamplePlan& plan) {
  CheckResult out;
  out.method = std::move(method);
  out.zero = is_zero(residual, plan);
  out.residual = std::move(residual);
  out.verdict = verdict_of(out.zero);
  out.note = out.zero.message;
  return out;
}

bool only_point_variables(const Expr& e) {
  for (const auto& k : jet_keys(e)) {
    if (k.t != 0 || k.x != 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Representations

GcsOperator GcsOperator::reduced(Expr eta) {
  if (has_t_derivatives(eta)) throw InvalidArgument("reduced operator contains t-derivatives");
  const int rho = max_x_order(eta);
  if (rho < 0) throw InvalidArgument("operator characteristic does not depend on the dependent variable");
  return GcsOperator(Form::Reduced, rho, std::move(eta));
}

GcsOperator GcsOperator::canonical(int rho, Expr eta_check) {
  if (rho < 1) throw InvalidArgument("canonical operator order must be positive");
  if (has_t_derivatives(eta_check) || max_x_order(eta_check) >= rho) {
    throw InvalidArgument("canonical right-hand side must depend on u_0..u_" + std::to_string(rho - 1) + " only");
  }
  return GcsOperator(Form::Canonical, rho, std::move(eta_check));
}

const Expr& GcsOperator::eta() const {
  if (form_ != Form::Reduced) throw InvalidArgument("operator is not in reduced form");
  return expr_;
}

const Expr& GcsOperator::eta_check() const {
  if (form_ != Form::Canonical) throw InvalidArgument("operator is not in canonical form");
  return expr_;
}

Expr GcsOperator::characteristic() const {
  if (form_ == Form::Reduced) return expr_;
  return Expr::u(rho_) - expr_;
}

Expr UsualOperator::characteristic() const { return eta - tau * Expr::jet({1, 0}) - xi * Expr::u(1); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Symmetry:
      return "Symmetry";
    case Verdict::Probable:
      return "Probable";
    case Verdict::NotSymmetry:
      return "NotSymmetry";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return {};
}

Expr build_hhat(const EvolutionEquation& eq, const GcsOperator& op) {
  return RestrictedFrame(eq, op.eta_check(), op.rho()).hhat();
}

GcsOperator to_reduced_form(const EvolutionEquation& eq, const Expr& eta, const SamplePlan& plan) {
  Expr reduced = eliminate_t_derivatives(eta, eq);
  if (is_zero(reduced, plan).zero()) {
    throw TrivialOperatorError("characteristic vanishes identically on solutions of the equation");
  }
  return GcsOperator::reduced(std::move(reduced));
}

GcsOperator to_canonical(const GcsOperator& op, const SamplePlan& plan) {
  if (op.is_canonical()) return op;
  const Expr& eta = op.eta();
  const int rho = op.rho();
  if (rho < 1) throw InvalidArgument("order-zero characteristic has no canonical form");
  const Symbol top = Symbol::u(rho);

  Expr slope = diff(eta, top);
  const auto curvature = is_zero(diff(slope, top), plan);
  if (!curvature.zero()) {
    throw NonQuasilinearError("characteristic is not affine in its highest derivative u_" + std::to_string(rho) +
                              " (" + to_string(curvature.status) + ")");
  }
  const Substitution drop_top{{top, Expr(0)}};
  slope = substitute(slope, drop_top);
  const auto rank = is_zero(slope, plan);
  if (!rank.nonzero()) {
    throw InvalidArgument("coefficient of u_" + std::to_string(rho) + " is not shown nonzero (" +
                          to_string(rank.status) + ")");
  }
  Expr free_part = substitute(eta, drop_top);
  return GcsOperator::canonical(rho, -free_part / slope);
}

GcsOperator usual_to_generalized(const EvolutionEquation& eq, const UsualOperator& uop, const SamplePlan& plan) {
  if (!only_point_variables(uop.tau) || !only_point_variables(uop.xi) || !only_point_variables(uop.eta)) {
    throw InvalidArgument("usual operator coefficients may depend on t, x and u only");
  }
  const bool tau_zero = is_zero(uop.tau, plan).zero();
  const bool xi_zero = is_zero(uop.xi, plan).zero();
  if (tau_zero && xi_zero) throw InvalidArgument("operator with tau = xi = 0 has no first- or higher-order form");

  Expr eta_hat = uop.eta - uop.tau * eq.rhs() - uop.xi * Expr::u(1);
  if (is_zero(eta_hat, plan).zero()) throw TrivialOperatorError("generalized characteristic vanishes identically");
  const int expected = tau_zero ? 1 : eq.order();
  if (max_x_order(eta_hat) != expected) {
    throw GcsError("generalized characteristic has order " + std::to_string(max_x_order(eta_hat)) + ", expected " +
                   std::to_string(expected));
  }
  return GcsOperator::reduced(std::move(eta_hat));
}

// ---------------------------------------------------------------------------
// Decision procedures

CheckResult check_gcs(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan) {
  const GcsOperator c = to_canonical(op, plan);
  const RestrictedFrame frame(eq, c.eta_check(), c.rho());
  Expr residual = frame.dt(c.eta_check()) - frame.dx(frame.hhat(), c.rho());
  return finish("determining-equation", std::move(residual), plan);
}

CheckResult check_involutivity(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan) {
  const GcsOperator c = to_canonical(op, plan);
  const int rho = c.rho();
  const int r = eq.order();

  // Fresh coordinates v^0..v^{rho-1} named so they cannot clash with parameters.
  std::set<std::string> taken;
  for (const auto& s : free_symbols(eq.rhs())) {
    if (s.is_param()) taken.insert(s.name);
  }
  for (const auto& s : free_symbols(c.eta_check())) {
    if (s.is_param()) taken.insert(s.name);
  }
  std::string prefix = "V";
  auto clashes = [&] {
    for (int a = 0; a < rho; ++a) {
      if (taken.contains(prefix + std::to_string(a))) return true;
    }
    return false;
  };
  while (clashes()) prefix += "V";

  std::vector<Symbol> v;
  Substitution to_v, from_v;
  for (int a = 0; a < rho; ++a) {
    v.push_back(Symbol::param(prefix + std::to_string(a)));
    to_v.emplace(Symbol::u(a), Expr::symbol(v.back()));
    from_v.emplace(v.back(), Expr::u(a));
  }
  const Expr eta_v = substitute(c.eta_check(), to_v);

  VectorField dx;
  dx.set(Symbol::x(), Expr(1));
  for (int a = 1; a < rho; ++a) dx.set(v[a - 1], Expr::symbol(v[a]));
  dx.set(v[rho - 1], eta_v);

  Substitution h_subs = to_v;
  if (rho <= r) {
    Expr d = eta_v;
    for (int j = 0; j <= r - rho; ++j) {
      if (j > 0) d = dx.apply(d);
      h_subs.emplace(Symbol::u(rho + j), d);
    }
  }
  const Expr h_v = substitute(eq.rhs(), h_subs);

  VectorField dt;
  dt.set(Symbol::t(), Expr(1));
  Expr coeff = h_v;
  for (int b = 1; b <= rho; ++b) {
    if (b > 1) coeff = dx.apply(coeff);
    dt.set(v[b - 1], coeff);
  }

  const VectorField bracket = VectorField::commutator(dt, dx);
  for (const auto& [sym, value] : bracket.components()) {
    if (sym == v[rho - 1] || value.is_zero()) continue;
    CheckResult out;
    out.method = "involutivity";
    out.verdict = Verdict::Inconclusive;
    out.residual = substitute(value, from_v);
    out.note = "commutator has a nonzero component along " + sym.id();
    return out;
  }
  return finish("involutivity", substitute(bracket.component(v[rho - 1]), from_v), plan);
}

CheckResult integrability_probe(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan) {
  const GcsOperator c = to_canonical(op, plan);
  const Expr eta_hat = op.is_canonical() ? op.characteristic() : op.eta();
  const int rho = c.rho();
  const int r = eq.order();

  const Expr probe = total_dt(eta_hat) - diff(eq.rhs(), Symbol::u(r)) * total_dx(eta_hat, r) -
                     diff(eta_hat, Symbol::u(rho)) * total_dx(eq.residual_form(), rho);
  Expr on_equation = eliminate_t_derivatives(probe, eq);

  // u_{rho+j} expressed through u_0..u_{rho-1}: plain D_x followed by
  // replacing the single new u_rho.
  const int top = max_x_order(on_equation);
  Substitution subs;
  Expr s = c.eta_check();
  const Substitution close{{Symbol::u(rho), c.eta_check()}};
  for (int j = 0; rho + j <= top; ++j) {
    if (j > 0) s = substitute(total_dx(s), close);
    subs.emplace(Symbol::u(rho + j), s);
  }
  return finish("integrability", substitute(on_equation, subs), plan);
}

std::optional<Point> common_witness(const std::vector<CheckResult>& results, const SamplePlan& plan,
                                    const std::set<Symbol>& extra) {
  std::set<Symbol> symbols = extra;
  for (const auto& r : results) {
    for (const auto& s : free_symbols(r.residual)) symbols.insert(s);
  }
  for (int i = 0; i < plan.n_points; ++i) {
    for (int attempt = 0; attempt <= plan.max_retries; ++attempt) {
      const Point pt = sample_point(plan, symbols, i, attempt);
      bool defined = true, all_nonzero = true;
      for (const auto& r : results) {
        try {
          const EvalResult v = evaluate(r.residual, pt);
          const double tol = plan.threshold * (plan.scale_relative ? std::max(1.0, v.scale) : 1.0);
          if (!(std::abs(v.value) > tol)) all_nonzero = false;
        } catch (const DomainError&) {
          defined = false;
          break;
        }
      }
      if (!defined) continue;
      if (all_nonzero) return pt;
      break;
    }
  }
  return std::nullopt;
}

bool canonical_equal(const GcsOperator& a, const GcsOperator& b, const SamplePlan& plan) {
  const GcsOperator ca = to_canonical(a, plan);
  const GcsOperator cb = to_canonical(b, plan);
  if (ca.rho() != cb.rho()) return false;
  return is_zero(ca.eta_check() - cb.eta_check(), plan).zero();
}

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(std::map<Symbol, Expr> components) : components_(std::move(components)) {}

void VectorField::set(const Symbol& s, Expr coefficient) { components_[s] = std::move(coefficient); }

const Expr& VectorField::component(const Symbol& s) const {
  static const Expr zero;
  auto it = components_.find(s);
  return it == components_.end() ? zero : it->second;
}

Expr VectorField::apply(const Expr& f) const {
  std::vector<Expr> terms;
  for (const auto& [sym, coeff] : components_) {
    Expr d = diff(f, sym);
    if (!d.is_zero()) terms.push_back(coeff * d);
  }
  return add(terms);
}

VectorField VectorField::commutator(const VectorField& x, const VectorField& y) {
  std::set<Symbol> keys;
  for (const auto& [s, _] : x.components_) keys.insert(s);
  for (const auto& [s, _] : y.components_) keys.insert(s);
  VectorField out;
  for (const auto& s : keys) out.set(s, x.apply(y.component(s)) - y.apply(x.component(s)));
  return out;
}

}  // namespace gcs
