#pragma once

// Ansatzes u = F(t, x, phi(t)) affine in phi, their associated canonical
// operators, and reduction of an evolution equation to a normal ODE system.

#include <optional>
#include <string>
#include <vector>

#include "gcs/equation.hpp"
#include "gcs/expr.hpp"
#include "gcs/matrix.hpp"
#include "gcs/numeric.hpp"
#include "gcs/symmetry.hpp"

namespace gcs {

class Ansatz {
 public:
  // F over t, x and the parameters named in `params` (phi^1..phi^rho, in that
  // order). Throws InvalidArgument when F contains jet variables, the
  // parameter count differs from rho, or F is not affine in them; throws
  // SingularAnsatzError when det Phi is not shown nonzero.
  Ansatz(int rho, Expr F, std::vector<std::string> params, const SamplePlan& plan = {});

  // Parameters taken from F in natural order (phi2 < phi10).
  static Ansatz with_free_parameters(int rho, Expr F, const SamplePlan& plan = {});

  int rho() const noexcept { return rho_; }
  const Expr& F() const noexcept { return F_; }
  const std::vector<std::string>& params() const noexcept { return params_; }
  Symbol param(int b) const { return Symbol::param(params_.at(static_cast<std::size_t>(b))); }

  // d^k F / dx^k.
  Expr F_x(int k) const;
  // d^k F / dx^k at phi = 0.
  Expr offset(int k) const;

  // Phi^{ab} = d(d^a F/dx^a)/d phi^b, a, b = 0..rho-1.
  const SymbolicMatrix& phi() const noexcept { return phi_; }
  const Expr& det_phi() const noexcept { return det_; }
  const SymbolicMatrix& phi_inverse() const noexcept { return phi_inv_; }

 private:
  int rho_;
  Expr F_;
  std::vector<std::string> params_;
  mutable std::vector<Expr> dx_;
  SymbolicMatrix phi_;
  Expr det_;
  SymbolicMatrix phi_inv_;
};

// Natural ordering of identifiers: alphabetic prefix, then numeric suffix.
bool natural_less(const std::string& a, const std::string& b);

struct ReducedSystem {
  int rho = 0;
  std::vector<std::string> params;
  std::vector<Expr> G;  // phi^a_t = G^a(t, phi)
};

struct ReductionResult {
  bool reducible = false;
  ReducedSystem system;        // reducible only
  int failing_index = -1;      // first a with d G^a/dx != 0
  Expr residual;               // that derivative
  ZeroVerdict verdict;         // its zero test
  std::vector<Expr> raw;       // G^a before x is eliminated
};

// G^a = sum_b PhiHat^{ab} (H~ - F_t)_{b}, where H~ is H with u_k -> d^k F/dx^k.
ReductionResult reduce(const EvolutionEquation& eq, const Ansatz& ansatz, const SamplePlan& plan = {});

// Solves u_a = F_a (a < rho) for phi and substitutes into F_rho.
GcsOperator ansatz_to_operator(const Ansatz& ansatz, const SamplePlan& plan = {});

struct RoundTrip {
  // u_a - F_a|_{phi = I(t, x, u)} for a < rho.
  ZeroVerdict inversion;
  // F_rho - etaCheck|_{u_a = F_a}.
  ZeroVerdict invariance;
  bool ok() const { return inversion.zero() && invariance.zero(); }
};

RoundTrip operator_round_trip(const Ansatz& ansatz, const GcsOperator& op, const SamplePlan& plan = {});

struct SolutionFamily {
  int rho = 0;
  Expr f;
  std::vector<std::string> params;  // kappa_1..kappa_rho
};

// det(d f_{a-1} / d kappa_b).
Expr essentiality_det(const SolutionFamily& family);

struct SolutionCheck {
  Expr residual;  // u_t - H(t, x, u, u_x, ...)
  ZeroVerdict verdict;
};

SolutionCheck verify_solution(const EvolutionEquation& eq, const Expr& u, const SamplePlan& plan = {});

// Renames kappa_a -> phi<a> (keeping the original names if that would clash).
// Throws EssentialityError or NotSolutionError.
Ansatz family_to_ansatz(const SolutionFamily& family, const EvolutionEquation& eq, const SamplePlan& plan = {});

}  // namespace gcs
