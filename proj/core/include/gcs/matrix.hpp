#pragma once

#include <cstddef>
#include <vector>

#include "gcs/expr.hpp"
#include "gcs/numeric.hpp"

namespace gcs {

// Dense row-major matrix of expressions.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t rows, std::size_t cols);

  static SymbolicMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Expr& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SymbolicMatrix operator*(const SymbolicMatrix& rhs) const;

  // Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
  // Pivot choice in the elimination uses the zero test.
  Expr determinant(const SamplePlan& plan = {}) const;

  SymbolicMatrix minor_matrix(std::size_t row, std::size_t col) const;
  SymbolicMatrix adjugate(const SamplePlan& plan = {}) const;

  // adj / det up to 4x4, Gauss-Jordan above. Throws SingularAnsatzError when
  // no nonzero pivot can be found.
  SymbolicMatrix inverse(const SamplePlan& plan = {}) const;

  // Zero test of every entry of this - I; returns the first failing verdict.
  ZeroVerdict identity_check(const SamplePlan& plan = {}) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expr> data_;
};

}  // namespace gcs
