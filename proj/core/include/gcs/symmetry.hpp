#pragma once

// Generalized conditional symmetries eta d_u of an evolution equation, their
// reduced / canonical representations, and three independent decision
// procedures for the conditional-invariance criterion.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcs/equation.hpp"
#include "gcs/expr.hpp"
#include "gcs/numeric.hpp"

namespace gcs {

class GcsOperator {
 public:
  enum class Form { Reduced, Canonical };

  // eta(t, x, u_0..u_rho); must contain no t-derivatives and depend on u.
  static GcsOperator reduced(Expr eta);
  // u_rho - etaCheck(t, x, u_0..u_{rho-1}).
  static GcsOperator canonical(int rho, Expr eta_check);

  Form form() const noexcept { return form_; }
  bool is_canonical() const noexcept { return form_ == Form::Canonical; }

  // Reduced: order of eta. Canonical: rho.
  int rho() const noexcept { return rho_; }
  const Expr& eta() const;        // Reduced only
  const Expr& eta_check() const;  // Canonical only

  // The characteristic as a differential function: eta, or u_rho - etaCheck.
  Expr characteristic() const;

 private:
  GcsOperator(Form f, int rho, Expr e) : form_(f), rho_(rho), expr_(std::move(e)) {}

  Form form_;
  int rho_;
  Expr expr_;
};

// tau d_t + xi d_x + eta d_u with coefficients in t, x, u.
struct UsualOperator {
  Expr tau;
  Expr xi;
  Expr eta;

  // eta - tau u_t - xi u_x.
  Expr characteristic() const;
};

enum class Verdict { Symmetry, Probable, NotSymmetry, Inconclusive };

std::string to_string(Verdict v);
inline bool accepted(Verdict v) { return v == Verdict::Symmetry || v == Verdict::Probable; }

struct CheckResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string method;
  Expr residual;  // in t, x, u_0..u_{rho-1}
  ZeroVerdict zero;
  std::string note;
};

// H^ for a canonical operator (see RestrictedFrame::hhat).
Expr build_hhat(const EvolutionEquation& eq, const GcsOperator& op);

// Eliminates t-derivatives from eta on solutions of eq.
// Throws TrivialOperatorError when the result vanishes identically.
GcsOperator to_reduced_form(const EvolutionEquation& eq, const Expr& eta, const SamplePlan& plan = {});

// Solves eta = 0 for its top derivative. Requires eta affine in u_rho with a
// coefficient that is nonzero at the sample points; otherwise throws
// NonQuasilinearError / InvalidArgument. Canonical operators pass through.
GcsOperator to_canonical(const GcsOperator& op, const SamplePlan& plan = {});

// eta^ = eta - tau H - xi u_1; order r if tau != 0, 1 if tau == 0.
GcsOperator usual_to_generalized(const EvolutionEquation& eq, const UsualOperator& uop, const SamplePlan& plan = {});

// Determining equation D^_t etaCheck = D^_x^rho H^.
CheckResult check_gcs(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan = {});

// Commutator of the restricted vector fields on (t, x, v^0..v^{rho-1}).
CheckResult check_involutivity(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan = {});

// F = D_t eta^ - H_{u_r} D_x^r eta^ - eta^_{u_rho} D_x^rho (u_t - H) on the
// prolonged manifold of the joint system.
CheckResult integrability_probe(const EvolutionEquation& eq, const GcsOperator& op, const SamplePlan& plan = {});

// A sample point at which every residual is nonzero beyond the plan's
// threshold, searched over the plan's points and retries. The point also
// covers `extra` symbols, so constant residuals still get a concrete point.
std::optional<Point> common_witness(const std::vector<CheckResult>& results, const SamplePlan& plan = {},
                                    const std::set<Symbol>& extra = {});

// Equality of canonical forms; false when the orders differ.
bool canonical_equal(const GcsOperator& a, const GcsOperator& b, const SamplePlan& plan = {});

// First-order differential operator sum_s X^s d/ds.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::map<Symbol, Expr> components);

  void set(const Symbol& s, Expr coefficient);
  const Expr& component(const Symbol& s) const;
  const std::map<Symbol, Expr>& components() const noexcept { return components_; }

  Expr apply(const Expr& f) const;

  // [X, Y]^s = X(Y^s) - Y(X^s).
  static VectorField commutator(const VectorField& x, const VectorField& y);

 private:
  std::map<Symbol, Expr> components_;
};

}  // namespace gcs
