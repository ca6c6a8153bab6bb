#pragma once

#include <random>
#include <string>
#include <vector>

#include "gcs/expr.hpp"
#include "gcs/numeric.hpp"
#include "gcs/syntax.hpp"

namespace gcs::testing {

inline Expr P(const std::string& text, const std::string& depvar = "u") { return parse(text, depvar); }

inline Rational frac(long num, long den) {
  Rational q(num);
  q /= den;
  return q;
}

inline bool equivalent(const Expr& a, const Expr& b, const SamplePlan& plan = {}) {
  return is_zero(a - b, plan).zero();
}

// Small random expressions over t, x, u, u_1, u_2 and one parameter, built
// from operations that stay real on the positive sampling box.
class RandomExpr {
 public:
  explicit RandomExpr(std::uint64_t seed) : gen_(seed) {}

  Expr operator()(int depth = 3) {
    if (depth == 0 || pick(4) == 0) return leaf();
    switch (pick(7)) {
      case 0:
      case 1:
        return (*this)(depth - 1) + (*this)(depth - 1);
      case 2:
      case 3:
        return (*this)(depth - 1) * (*this)(depth - 1);
      case 4:
        return pow(positive(depth - 1), frac(pick(5) - 2, 1 + pick(2)));
      case 5:
        return exp(leaf() / Expr(3));
      default:
        return ln(positive(depth - 1));
    }
  }

  // Strictly positive on the sampling box.
  Expr positive(int depth) {
    Expr e = leaf_positive();
    for (int i = 0; i < depth; ++i) {
      if (pick(2) == 0) e = e + leaf_positive();
      else e = e * leaf_positive();
    }
    return e;
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }

 private:
  Expr leaf() {
    switch (pick(8)) {
      case 0:
        return Expr::t();
      case 1:
        return Expr::x();
      case 2:
        return Expr::u();
      case 3:
        return Expr::u(1);
      case 4:
        return Expr::u(2);
      case 5:
        return Expr::param("c");
      default:
        return Expr(frac(pick(9) - 4, 1 + pick(3)));
    }
  }

  Expr leaf_positive() {
    switch (pick(6)) {
      case 0:
        return Expr::t();
      case 1:
        return Expr::x();
      case 2:
        return Expr::u();
      case 3:
        return Expr::u(1);
      case 4:
        return Expr::param("c");
      default:
        return Expr(frac(1 + pick(4), 1 + pick(2)));
    }
  }

  std::mt19937_64 gen_;
};

}  // namespace gcs::testing
