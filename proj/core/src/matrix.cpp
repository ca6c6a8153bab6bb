#include "gcs/matrix.hpp"

#include <utility>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

constexpr std::size_t kCofactorLimit = 4;

void require_square(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
}

Expr cofactor_det(const SymbolicMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Expr(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Expr t = m(0, j) * cofactor_det(m.minor_matrix(0, j));
    terms.push_back(j % 2 == 0 ? t : -t);
  }
  return add(terms);
}

Expr bareiss_det(SymbolicMatrix m, const SamplePlan& plan) {
  const std::size_t n = m.rows();
  bool negate = false;
  Expr prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!is_zero(m(k, k), plan).nonzero()) {
      std::size_t p = k + 1;
      while (p < n && !is_zero(m(p, k), plan).nonzero()) ++p;
      if (p == n) return Expr(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Expr(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

SymbolicMatrix gauss_jordan_inverse(SymbolicMatrix a, const SamplePlan& plan) {
  const std::size_t n = a.rows();
  SymbolicMatrix inv = SymbolicMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && !is_zero(a(p, k), plan).nonzero()) ++p;
    if (p == n) throw SingularAnsatzError("matrix has no nonzero pivot in column " + std::to_string(k));
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const Expr scale = Expr(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = a(k, j) * scale;
      inv(k, j) = inv(k, j) * scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Expr f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

SymbolicMatrix SymbolicMatrix::identity(std::size_t n) {
  SymbolicMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
  return m;
}

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix dimensions do not match");
  SymbolicMatrix out(rows_, rhs.cols_);
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      terms.clear();
      for (std::size_t k = 0; k < cols_; ++k) terms.push_back((*this)(i, k) * rhs(k, j));
      out(i, j) = add(terms);
    }
  }
  return out;
}

SymbolicMatrix SymbolicMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  SymbolicMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

Expr SymbolicMatrix::determinant(const SamplePlan& plan) const {
  require_square(*this);
  if (rows_ <= kCofactorLimit) return cofactor_det(*this);
  return bareiss_det(*this, plan);
}

SymbolicMatrix SymbolicMatrix::adjugate(const SamplePlan& plan) const {
  require_square(*this);
  const std::size_t n = rows_;
  SymbolicMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Expr(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Expr c = minor_matrix(i, j).determinant(plan);
      out(j, i) = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return out;
}

SymbolicMatrix SymbolicMatrix::inverse(const SamplePlan& plan) const {
  require_square(*this);
  if (rows_ > kCofactorLimit) return gauss_jordan_inverse(*this, plan);
  const Expr det = determinant(plan);
  if (!is_zero(det, plan).nonzero()) throw SingularAnsatzError("matrix determinant is not shown nonzero");
  SymbolicMatrix out = adjugate(plan);
  const Expr inv_det = Expr(1) / det;
  for (auto& e : out.data_) e = e * inv_det;
  return out;
}

ZeroVerdict SymbolicMatrix::identity_check(const SamplePlan& plan) const {
  require_square(*this);
  ZeroVerdict last;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Expr d = i == j ? (*this)(i, j) - Expr(1) : (*this)(i, j);
      ZeroVerdict v = is_zero(d, plan);
      if (!v.zero()) return v;
      if (v.status == ZeroVerdict::Status::ProbablyZero) last = v;
    }
  }
  return last;
}

}  // namespace gcs
