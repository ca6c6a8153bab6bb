#include "gcs/jet.hpp"

#include <algorithm>

#include "gcs/errors.hpp"
#include "gcs/syntax.hpp"

namespace gcs {

EvolutionEquation::EvolutionEquation(int order, Expr rhs, std::string depvar, const SamplePlan& plan)
    : order_(order), rhs_(std::move(rhs)), depvar_(std::move(depvar)) {
  if (order_ < 1) throw InvalidArgument("equation order must be positive");
  if (has_t_derivatives(rhs_)) throw InvalidArgument("right-hand side contains t-derivatives");
  if (max_x_order(rhs_) > order_) {
    throw InvalidArgument("right-hand side contains " + depvar_ + "_" + std::to_string(max_x_order(rhs_)) +
                          " beyond the declared order " + std::to_string(order_));
  }
  const auto top = is_zero(diff(rhs_, Symbol::u(order_)), plan);
  if (!top.nonzero()) {
    throw InvalidArgument("right-hand side does not depend on " + symbol_name(Symbol::u(order_), depvar_) +
                          " (" + to_string(top.status) + ")");
  }
}

int weight(const Expr& e, int r) {
  int w = 0;
  for (const auto& k : jet_keys(e)) w = std::max(w, weight(k, r));
  return w;
}

std::strong_ordering rank_compare(DerivKey a, DerivKey b, int r) {
  const int wa = weight(a, r), wb = weight(b, r);
  if (wa != wb) return wa <=> wb;
  if (a.t != b.t) return a.t <=> b.t;
  // Equal weight and equal t-order force equal x-order.
  return a.x <=> b.x;
}

std::optional<DerivKey> leading_derivative(const Expr& e, int r) {
  std::optional<DerivKey> best;
  for (const auto& k : jet_keys(e)) {
    if (!best || rank_compare(*best, k, r) < 0) best = k;
  }
  return best;
}

DerivativeClass classify_derivative(DerivKey k, int rho) {
  return (k.t >= 1 || k.x >= rho) ? DerivativeClass::Principal : DerivativeClass::Parametric;
}

Expr total_dx(const Expr& e) {
  std::vector<Expr> terms{diff(e, Symbol::x())};
  for (const auto& k : jet_keys(e)) terms.push_back(Expr::jet({k.t, k.x + 1}) * diff(e, Symbol::jet(k)));
  return add(terms);
}

Expr total_dx(const Expr& e, int times) {
  Expr out = e;
  for (int i = 0; i < times; ++i) out = total_dx(out);
  return out;
}

Expr total_dt(const Expr& e) {
  std::vector<Expr> terms{diff(e, Symbol::t())};
  for (const auto& k : jet_keys(e)) terms.push_back(Expr::jet({k.t + 1, k.x}) * diff(e, Symbol::jet(k)));
  return add(terms);
}

Expr reduced_dt(const Expr& e, const EvolutionEquation& eq) {
  if (has_t_derivatives(e)) throw InvalidArgument("reduced D_t needs an expression without t-derivatives");
  std::vector<Expr> terms{diff(e, Symbol::t())};
  const int m = max_x_order(e);
  Expr dxh = eq.rhs();
  for (int k = 0; k <= m; ++k) {
    if (k > 0) dxh = total_dx(dxh);
    Expr d = diff(e, Symbol::u(k));
    if (!d.is_zero()) terms.push_back(dxh * d);
  }
  return add(terms);
}

std::vector<Expr> frechet(const Expr& e) {
  if (has_t_derivatives(e)) throw InvalidArgument("Frechet derivative needs an expression without t-derivatives");
  const int m = max_x_order(e);
  std::vector<Expr> out;
  for (int i = 0; i <= m; ++i) out.push_back(diff(e, Symbol::u(i)));
  return out;
}

Expr apply_frechet(std::span<const Expr> coefficients, const Expr& g) {
  std::vector<Expr> terms;
  Expr dg = g;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) dg = total_dx(dg);
    terms.push_back(coefficients[i] * dg);
  }
  return add(terms);
}

Expr eliminate_t_derivatives(const Expr& e, const EvolutionEquation& eq) {
  Expr out = e;
  for (;;) {
    int top = 0;
    for (const auto& k : jet_keys(out)) top = std::max(top, k.t);
    if (top == 0) return out;
    Substitution subs;
    for (const auto& k : jet_keys(out)) {
      if (k.t != top) continue;
      Expr value = eq.rhs();
      for (int i = 1; i < k.t; ++i) value = total_dt(value);
      value = total_dx(value, k.x);
      subs.emplace(Symbol::jet(k), value);
    }
    out = substitute(out, subs);
  }
}

RestrictedFrame::RestrictedFrame(const EvolutionEquation& eq, Expr eta_check, int rho)
    : rho_(rho), eta_check_(std::move(eta_check)) {
  if (rho_ < 1) throw InvalidArgument("constraint order must be positive");
  require_closed(eta_check_, "canonical right-hand side");
  const int r = eq.order();
  if (rho_ > r) {
    hhat_ = eq.rhs();
  } else {
    Substitution subs;
    Expr d = eta_check_;
    for (int j = 0; j <= r - rho_; ++j) {
      if (j > 0) d = dx(d);
      subs.emplace(Symbol::u(rho_ + j), d);
    }
    hhat_ = substitute(eq.rhs(), subs);
  }
  dx_hhat_.push_back(hhat_);
  for (int k = 1; k < rho_; ++k) dx_hhat_.push_back(dx(dx_hhat_.back()));
}

void RestrictedFrame::require_closed(const Expr& e, const char* what) const {
  for (const auto& k : jet_keys(e)) {
    if (k.t != 0 || k.x >= rho_) {
      throw InvalidArgument(std::string(what) + " contains u_{" + std::to_string(k.t) + "," + std::to_string(k.x) +
                            "}, outside u_0..u_" + std::to_string(rho_ - 1));
    }
  }
}

Expr RestrictedFrame::dx(const Expr& e) const {
  require_closed(e, "argument of restricted D_x");
  std::vector<Expr> terms{diff(e, Symbol::x())};
  for (int b = 1; b < rho_; ++b) {
    Expr d = diff(e, Symbol::u(b - 1));
    if (!d.is_zero()) terms.push_back(Expr::u(b) * d);
  }
  Expr d = diff(e, Symbol::u(rho_ - 1));
  if (!d.is_zero()) terms.push_back(eta_check_ * d);
  return add(terms);
}

Expr RestrictedFrame::dx(const Expr& e, int times) const {
  Expr out = e;
  for (int i = 0; i < times; ++i) out = dx(out);
  return out;
}

Expr RestrictedFrame::dt(const Expr& e) const {
  require_closed(e, "argument of restricted D_t");
  std::vector<Expr> terms{diff(e, Symbol::t())};
  for (int b = 1; b <= rho_; ++b) {
    Expr d = diff(e, Symbol::u(b - 1));
    if (!d.is_zero()) terms.push_back(dx_hhat_[static_cast<std::size_t>(b - 1)] * d);
  }
  return add(terms);
}

Expr restricted_dx(const Expr& e, const EvolutionEquation& eq, const Expr& eta_check, int rho) {
  return RestrictedFrame(eq, eta_check, rho).dx(e);
}

Expr restricted_dt(const Expr& e, const EvolutionEquation& eq, const Expr& eta_check, int rho) {
  return RestrictedFrame(eq, eta_check, rho).dt(e);
}

}  // namespace gcs
