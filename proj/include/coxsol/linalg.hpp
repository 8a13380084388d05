#pragma once

// Dense exact linear algebra over Q or Q(zeta_n).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxsol/cyclotomic.hpp"
#include "coxsol/errors.hpp"
#include "coxsol/rational.hpp"

namespace coxsol {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  static Matrix from_columns(const std::vector<Vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> row(std::size_t i) const {
    return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Vector<T> apply(const Vector<T>& v) const {
    Vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Brings `m` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row (rows beyond the rank are zero afterwards).
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}.
template <class T>
std::vector<Vector<T>> nullspace(Matrix<T> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for x, if solvable (any solution).
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const auto pivots = rref(aug);
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw SingularMatrix("inverse of a non-square matrix");
  auto x = solve(a, Matrix<T>::identity(a.rows()));
  if (!x || rank(a) != a.rows()) throw SingularMatrix("matrix is singular");
  return *x;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw SingularMatrix("determinant of a non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// A subspace held as the nonzero rows of a reduced row echelon matrix.
/// Coordinates of a member vector in this basis are its entries at the
/// pivot columns.
template <class T>
class RowSpace {
 public:
  RowSpace() = default;

  static RowSpace spanned_by(const std::vector<Vector<T>>& vectors, std::size_t dim) {
    RowSpace s;
    s.dim_ = dim;
    if (vectors.empty()) return s;
    Matrix<T> m = Matrix<T>::from_rows(vectors, dim);
    s.pivots_ = rref(m);
    for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(i));
    return s;
  }

  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  const std::vector<Vector<T>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates w.r.t. basis(), assuming v lies in the space.
  Vector<T> coordinates(const Vector<T>& v) const {
    Vector<T> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool contains(const Vector<T>& v) const {
    Vector<T> r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const T f = r[pivots_[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(basis_[i][j])) r[j] -= f * basis_[i][j];
    }
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector<T>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown reduced echelon basis. Every stored row has a 1 at
/// its pivot and zeros at the other rows' pivots, so the coordinates of a
/// member vector are its entries at the pivots.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  const std::vector<Vector<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the stored rows.
  Vector<T> reduce(Vector<T> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T f = v[pivots_[i]];
      if (is_zero(f)) continue;
      const auto& r = rows_[i];
      for (std::size_t j : support_[i]) v[j] -= f * r[j];
    }
    return v;
  }

  bool contains(const Vector<T>& v) const {
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }

  /// Adds v if it is not already in the span; returns whether it was added.
  bool insert(const Vector<T>& v) {
    Vector<T> r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(r[p])) ++p;
    if (p == dim_) return false;
    const T inv = T(1) / r[p];
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero(r[j])) {
        r[j] *= inv;
        supp.push_back(j);
      }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T f = rows_[i][p];
      if (is_zero(f)) continue;
      for (std::size_t j : supp) rows_[i][j] -= f * r[j];
      refresh_support(i);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    support_.push_back(std::move(supp));
    return true;
  }

  Vector<T> coordinates(const Vector<T>& v) const {
    Vector<T> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

 private:
  void refresh_support(std::size_t i) {
    support_[i].clear();
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero(rows_[i][j])) support_[i].push_back(j);
  }

  std::size_t dim_;
  std::vector<Vector<T>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

}  // namespace coxsol
