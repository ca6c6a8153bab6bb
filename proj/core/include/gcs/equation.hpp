#pragma once

#include <string>

#include "gcs/expr.hpp"
#include "gcs/numeric.hpp"

namespace gcs {

// u_t = H(t, x, u, u_1, ..., u_r).
class EvolutionEquation {
 public:
  // Throws InvalidArgument when H contains t-derivatives or u_k with k > r,
  // or when H_{u_r} is not shown nonzero at the sample points.
  EvolutionEquation(int order, Expr rhs, std::string depvar = "u", const SamplePlan& plan = {});

  int order() const noexcept { return order_; }
  const Expr& rhs() const noexcept { return rhs_; }
  const std::string& depvar() const noexcept { return depvar_; }

  // E = u_t - H.
  Expr residual_form() const { return Expr::jet({1, 0}) - rhs_; }

 private:
  int order_;
  Expr rhs_;
  std::string depvar_;
};

}  // namespace gcs
