#include "gcs/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

// First failing verdict, else the weakest passing one.
ZeroVerdict worst_of(const std::vector<ZeroVerdict>& verdicts) {
  ZeroVerdict out;
  for (const auto& v : verdicts) {
    if (!v.zero()) return v;
    if (v.status == ZeroVerdict::Status::ProbablyZero) out = v;
  }
  return out;
}

std::pair<std::string, long> split_natural(const std::string& s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || s.size() - i > 15) return {s, -1};
  return {s.substr(0, i), std::stol(s.substr(i))};
}

// Substitution phi^b -> I^b(t, x, u_0..u_{rho-1}).
Substitution inversion_map(const Ansatz& a) {
  Substitution out;
  for (int b = 0; b < a.rho(); ++b) {
    std::vector<Expr> terms;
    for (int c = 0; c < a.rho(); ++c) {
      const Expr& m = a.phi_inverse()(static_cast<std::size_t>(b), static_cast<std::size_t>(c));
      if (!m.is_zero()) terms.push_back(m * (Expr::u(c) - a.offset(c)));
    }
    out.emplace(a.param(b), add(terms));
  }
  return out;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  auto [pa, na] = split_natural(a);
  auto [pb, nb] = split_natural(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

Ansatz::Ansatz(int rho, Expr F, std::vector<std::string> params, const SamplePlan& plan)
    : rho_(rho), F_(std::move(F)), params_(std::move(params)) {
  if (rho_ < 1) throw InvalidArgument("ansatz order must be positive");
  if (static_cast<int>(params_.size()) != rho_) {
    throw InvalidArgument("ansatz of order " + std::to_string(rho_) + " needs " + std::to_string(rho_) +
                          " parameters, got " + std::to_string(params_.size()));
  }
  if (std::set<std::string>(params_.begin(), params_.end()).size() != params_.size()) {
    throw InvalidArgument("ansatz parameters must be distinct");
  }
  if (!jet_keys(F_).empty()) throw InvalidArgument("ansatz may not contain derivatives of the dependent variable");

  for (int b = 0; b < rho_; ++b) {
    const Expr db = diff(F_, param(b));
    for (int c = b; c < rho_; ++c) {
      const auto v = is_zero(diff(db, param(c)), plan);
      if (!v.zero()) throw InvalidArgument("ansatz is not affine in " + params_[b] + ", " + params_[c]);
    }
  }

  const auto n = static_cast<std::size_t>(rho_);
  phi_ = SymbolicMatrix(n, n);
  for (int a = 0; a < rho_; ++a) {
    const Expr fa = F_x(a);
    for (int b = 0; b < rho_; ++b) phi_(a, b) = diff(fa, param(b));
  }
  det_ = phi_.determinant(plan);
  const auto dv = is_zero(det_, plan);
  if (!dv.nonzero()) throw SingularAnsatzError("det Phi is not shown nonzero (" + to_string(dv.status) + ")");
  phi_inv_ = phi_.inverse(plan);
}

Ansatz Ansatz::with_free_parameters(int rho, Expr F, const SamplePlan& plan) {
  std::vector<std::string> names;
  for (const auto& s : free_symbols(F)) {
    if (s.is_param()) names.push_back(s.name);
  }
  std::sort(names.begin(), names.end(), natural_less);
  return Ansatz(rho, std::move(F), std::move(names), plan);
}

Expr Ansatz::F_x(int k) const {
  if (dx_.empty()) dx_.push_back(F_);
  while (static_cast<int>(dx_.size()) <= k) dx_.push_back(diff(dx_.back(), Symbol::x()));
  return dx_[static_cast<std::size_t>(k)];
}

Expr Ansatz::offset(int k) const {
  Substitution zero;
  for (int b = 0; b < rho_; ++b) zero.emplace(param(b), Expr(0));
  return substitute(F_x(k), zero);
}

ReductionResult reduce(const EvolutionEquation& eq, const Ansatz& ansatz, const SamplePlan& plan) {
  const int rho = ansatz.rho();
  Substitution on_ansatz;
  for (int k = 0; k <= std::max(0, max_x_order(eq.rhs())); ++k) on_ansatz.emplace(Symbol::u(k), ansatz.F_x(k));
  const Expr defect = substitute(eq.rhs(), on_ansatz) - diff(ansatz.F(), Symbol::t());

  std::vector<Expr> dk{defect};
  for (int k = 1; k < rho; ++k) dk.push_back(diff(dk.back(), Symbol::x()));

  ReductionResult out;
  for (int a = 0; a < rho; ++a) {
    std::vector<Expr> terms;
    for (int b = 0; b < rho; ++b) {
      const Expr& m = ansatz.phi_inverse()(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (!m.is_zero()) terms.push_back(m * dk[static_cast<std::size_t>(b)]);
    }
    out.raw.push_back(add(terms));
  }

  std::vector<ZeroVerdict> passes;
  for (int a = 0; a < rho; ++a) {
    Expr d = diff(out.raw[static_cast<std::size_t>(a)], Symbol::x());
    ZeroVerdict v = is_zero(d, plan);
    if (!v.zero()) {
      out.failing_index = a;
      out.residual = std::move(d);
      out.verdict = std::move(v);
      return out;
    }
    passes.push_back(std::move(v));
  }
  out.verdict = worst_of(passes);
  out.reducible = true;
  out.system.rho = rho;
  out.system.params = ansatz.params();

  // G^a does not depend on x, so any admissible x gives the same function.
  const Rational probes[] = {Rational(1), Rational(2), Rational(3, 2), Rational(5, 7)};
  for (const Expr& g : out.raw) {
    Expr clean = g;
    for (const auto& p : probes) {
      Expr candidate;
      try {
        candidate = substitute(g, {{Symbol::x(), Expr(p)}});
      } catch (const DomainError&) {
        continue;
      }
      if (is_zero(g - candidate, plan).zero()) {
        clean = std::move(candidate);
        break;
      }
    }
    out.system.G.push_back(std::move(clean));
  }
  return out;
}

GcsOperator ansatz_to_operator(const Ansatz& ansatz, const SamplePlan& plan) {
  (void)plan;
  return GcsOperator::canonical(ansatz.rho(), substitute(ansatz.F_x(ansatz.rho()), inversion_map(ansatz)));
}

RoundTrip operator_round_trip(const Ansatz& ansatz, const GcsOperator& op, const SamplePlan& plan) {
  const GcsOperator c = to_canonical(op, plan);
  if (c.rho() != ansatz.rho()) throw InvalidArgument("operator and ansatz orders differ");
  const int rho = ansatz.rho();

  RoundTrip out;
  const Substitution inv = inversion_map(ansatz);
  std::vector<ZeroVerdict> parts;
  for (int a = 0; a < rho; ++a) parts.push_back(is_zero(Expr::u(a) - substitute(ansatz.F_x(a), inv), plan));
  out.inversion = worst_of(parts);

  Substitution on_ansatz;
  for (int a = 0; a < rho; ++a) on_ansatz.emplace(Symbol::u(a), ansatz.F_x(a));
  out.invariance = is_zero(ansatz.F_x(rho) - substitute(c.eta_check(), on_ansatz), plan);
  return out;
}

Expr essentiality_det(const SolutionFamily& family) {
  if (family.rho < 1 || static_cast<int>(family.params.size()) != family.rho) {
    throw InvalidArgument("solution family needs exactly rho parameters");
  }
  const auto n = static_cast<std::size_t>(family.rho);
  SymbolicMatrix m(n, n);
  Expr fa = family.f;
  for (std::size_t a = 0; a < n; ++a) {
    if (a > 0) fa = diff(fa, Symbol::x());
    for (std::size_t b = 0; b < n; ++b) m(a, b) = diff(fa, Symbol::param(family.params[b]));
  }
  return m.determinant();
}

SolutionCheck verify_solution(const EvolutionEquation& eq, const Expr& u, const SamplePlan& plan) {
  if (!jet_keys(u).empty()) throw InvalidArgument("candidate solution may not contain jet variables");
  Substitution subs;
  Expr d = u;
  for (int k = 0; k <= std::max(0, max_x_order(eq.rhs())); ++k) {
    if (k > 0) d = diff(d, Symbol::x());
    subs.emplace(Symbol::u(k), d);
  }
  SolutionCheck out;
  out.residual = diff(u, Symbol::t()) - substitute(eq.rhs(), subs);
  out.verdict = is_zero(out.residual, plan);
  return out;
}

Ansatz family_to_ansatz(const SolutionFamily& family, const EvolutionEquation& eq, const SamplePlan& plan) {
  const auto ev = is_zero(essentiality_det(family), plan);
  if (!ev.nonzero()) {
    throw EssentialityError("essentiality determinant is not shown nonzero (" + to_string(ev.status) +
                            "); some parameter is inessential");
  }
  const auto sv = verify_solution(eq, family.f, plan);
  if (!sv.verdict.zero()) {
    throw NotSolutionError("family is not a solution of the equation (" + to_string(sv.verdict.status) + ")");
  }

  const std::set<std::string> kappa(family.params.begin(), family.params.end());
  std::vector<std::string> names;
  for (int a = 1; a <= family.rho; ++a) names.push_back("phi" + std::to_string(a));
  bool clash = false;
  for (const auto& s : free_symbols(family.f)) {
    if (s.is_param() && !kappa.contains(s.name) &&
        std::find(names.begin(), names.end(), s.name) != names.end()) {
      clash = true;
    }
  }
  if (clash) return Ansatz(family.rho, family.f, family.params, plan);

  Substitution rename;
  for (std::size_t a = 0; a < names.size(); ++a) {
    rename.emplace(Symbol::param(family.params[a]), Expr::param(names[a]));
  }
  return Ansatz(family.rho, substitute(family.f, rename), names, plan);
}

}  // namespace gcs
