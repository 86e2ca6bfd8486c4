#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitq/error.hpp"
#include "splitq/scalar.hpp"

// Small dense linear algebra over a scalar backend: elimination-based rank,
// determinant, null space, consistency and Moore-Penrose inverse by full-rank
// factorization. Exact on Rational; partial pivoting with an absolute zero
// threshold on double.
namespace splitq::linalg {

template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(r, k), Tolerance{0.0})) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <Scalar T>
std::size_t choose_pivot(const Matrix<T>& m, std::size_t row, std::size_t col, Tolerance tol) {
  std::size_t best = m.rows();
  if constexpr (ScalarTraits<T>::exact) {
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col), tol)) return r;
  } else {
    double best_abs = tol.eps;
    for (std::size_t r = row; r < m.rows(); ++r) {
      const double v = std::abs(to_double(m(r, col)));
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
  }
  return best;
}

template <Scalar T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

// Gauss-Jordan elimination to reduced row echelon form.
template <Scalar T>
Echelon<T> row_reduce(Matrix<T> m, Tolerance tol = {}) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    const std::size_t p = detail::choose_pivot(m, row, col, tol);
    if (p == m.rows()) {
      if constexpr (!ScalarTraits<T>::exact) {
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      }
      continue;
    }
    detail::swap_rows(m, row, p);
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col), Tolerance{0.0})) continue;
      const T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Scalar T>
std::size_t rank(const Matrix<T>& m, Tolerance tol = {}) {
  return row_reduce(m, tol).rank();
}

// Bareiss fraction-free elimination on the exact backend, partial pivoting
// otherwise.
template <Scalar T>
T determinant(Matrix<T> m, Tolerance tol = {}) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return T(1);
  bool negate = false;
  if constexpr (ScalarTraits<T>::exact) {
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (is_zero(m(k, k), tol)) {
        std::size_t p = k + 1;
        while (p < n && is_zero(m(p, k), tol)) ++p;
        if (p == n) return T(0);
        detail::swap_rows(m, k, p);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      prev = m(k, k);
    }
    return negate ? T(-m(n - 1, n - 1)) : m(n - 1, n - 1);
  } else {
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t p = detail::choose_pivot(m, k, k, Tolerance{0.0});
      if (p == n) return T(0);
      if (p != k) {
        detail::swap_rows(m, k, p);
        negate = !negate;
      }
      det = det * m(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = m(i, k) / m(k, k);
        for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
      }
    }
    return negate ? T(-det) : det;
  }
}

// Basis of {v : m v = 0}, one vector per free column.
template <Scalar T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& m, Tolerance tol = {}) {
  const Echelon<T> e = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Whether m x = rhs has a solution (rank test on the augmented matrix).
template <Scalar T>
bool is_consistent(const Matrix<T>& m, const std::vector<T>& rhs, Tolerance tol = {}) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  return rank(aug, tol) == rank(m, tol);
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m, Tolerance tol = {}) {
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  const Echelon<T> e = row_reduce(aug, tol);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible, "singular matrix");
  Matrix<T> out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

// Moore-Penrose inverse via the full-rank factorization m = B C, where C holds
// the nonzero rows of the reduced echelon form and B the pivot columns of m:
//   m+ = C^T (C C^T)^-1 (B^T B)^-1 B^T.
template <Scalar T>
Matrix<T> mp_inverse(const Matrix<T>& m, Tolerance tol = {}) {
  const Echelon<T> e = row_reduce(m, tol);
  const std::size_t r = e.rank();
  if (r == 0) return Matrix<T>(m.cols(), m.rows());
  Matrix<T> b(m.rows(), r);
  Matrix<T> c(r, m.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t row = 0; row < m.rows(); ++row) b(row, k) = m(row, e.pivots[k]);
    for (std::size_t col = 0; col < m.cols(); ++col) c(k, col) = e.reduced(k, col);
  }
  const Matrix<T> ct = c.transpose();
  const Matrix<T> bt = b.transpose();
  return ct * inverse(Matrix<T>(c * ct), tol) * inverse(Matrix<T>(bt * b), tol) * bt;
}

}  // namespace splitq::linalg
