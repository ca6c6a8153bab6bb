#pragma once

// Total derivatives, weights and the weight-lexicographic ranking on the jet
// space of one dependent variable u(t, x).

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "gcs/equation.hpp"
#include "gcs/expr.hpp"

namespace gcs {

// [alpha] = r * alpha_t + alpha_x.
constexpr int weight(DerivKey k, int r) noexcept { return r * k.t + k.x; }

// Maximal weight of a jet variable in e; 0 when e has none.
int weight(const Expr& e, int r);

// u_a <= u_b  iff  [a] < [b], or [a] == [b] and a.t <= b.t.
std::strong_ordering rank_compare(DerivKey a, DerivKey b, int r);

// Highest-ranked jet variable occurring in e.
std::optional<DerivKey> leading_derivative(const Expr& e, int r);

enum class DerivativeClass { Principal, Parametric };

// Classification relative to the orthonomic system {u_t = ..., u_rho = ...}:
// principal iff alpha_t >= 1 or alpha_x >= rho.
DerivativeClass classify_derivative(DerivKey k, int rho);

// D_x = d/dx + sum u_{a,b+1} d/du_{a,b}.
Expr total_dx(const Expr& e);
Expr total_dx(const Expr& e, int times);

// D_t = d/dt + sum u_{a+1,b} d/du_{a,b}.
Expr total_dt(const Expr& e);

// D~_t = d/dt + sum_k (D_x^k H) d/du_k on solutions of eq.
// Throws InvalidArgument if e contains t-derivatives.
Expr reduced_dt(const Expr& e, const EvolutionEquation& eq);

// Coefficients (f_{u_0}, ..., f_{u_m}) of the Frechet derivative
// f_* = sum f_{u_i} D_x^i. Empty for expressions free of u.
std::vector<Expr> frechet(const Expr& e);
Expr apply_frechet(std::span<const Expr> coefficients, const Expr& g);

// Replaces every u_{a,b} with a >= 1 by D_t^{a-1} D_x^b H, highest a first,
// until no t-derivatives remain.
Expr eliminate_t_derivatives(const Expr& e, const EvolutionEquation& eq);

// Total derivatives restricted to the manifold of eq and u_rho = etaCheck.
// Operates on expressions in t, x, u_0..u_{rho-1} and parameters only.
class RestrictedFrame {
 public:
  RestrictedFrame(const EvolutionEquation& eq, Expr eta_check, int rho);

  int rho() const noexcept { return rho_; }
  const Expr& eta_check() const noexcept { return eta_check_; }

  // H^: H itself if rho > r, otherwise H with u_{rho+j} -> D^_x^j etaCheck.
  const Expr& hhat() const noexcept { return hhat_; }

  // D^_x = d/dx + sum_{b=1}^{rho-1} u_b d/du_{b-1} + etaCheck d/du_{rho-1}.
  Expr dx(const Expr& e) const;
  Expr dx(const Expr& e, int times) const;

  // D^_t = d/dt + sum_{b=1}^{rho} (D^_x^{b-1} H^) d/du_{b-1}.
  Expr dt(const Expr& e) const;

  // Throws InvalidArgument if e leaves the restricted coordinate set.
  void require_closed(const Expr& e, const char* what) const;

 private:
  int rho_;
  Expr eta_check_;
  Expr hhat_;
  std::vector<Expr> dx_hhat_;  // D^_x^k H^, k = 0..rho-1
};

Expr restricted_dx(const Expr& e, const EvolutionEquation& eq, const Expr& eta_check, int rho);
Expr restricted_dt(const Expr& e, const EvolutionEquation& eq, const Expr& eta_check, int rho);

}  // namespace gcs
