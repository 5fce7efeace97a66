#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

template <Field F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionMismatch("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix diagonal(std::span<const F> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Matrix whose j-th column is `columns[j]`.
  static Matrix from_columns(const std::vector<Vector<F>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) throw DimensionMismatch("ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<F>& entries() const { return entries_; }

  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector<F> out(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const F& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
      }
    return out;
  }

  bool is_zero() const {
    for (const F& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Entrywise image under a field embedding (e.g. Q into Q(t)).
  template <Field G, class Fn>
  Matrix<G> map(Fn&& fn) const {
    std::vector<G> out;
    out.reserve(entries_.size());
    for (const F& e : entries_) out.push_back(fn(e));
    return Matrix<G>(rows_, cols_, std::move(out));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> entries_;
};

template <Field F>
std::string to_string(const Matrix<F>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
  }
  return out + "]";
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivot rule: for each column left to right, the
/// first row (top to bottom, below the current rank) with a nonzero entry.
template <Field F>
Echelon<F> reduced_row_echelon(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    const F inv = F(1) / m(rank, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(rank, j).is_zero()) m(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, c).is_zero()) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(rank, j).is_zero()) m(i, j) -= factor * m(rank, j);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return reduced_row_echelon(m).pivots.size();
}

/// Fraction-free (Bareiss) elimination on the row-wise integer scaling of m.
std::size_t rank(const Matrix<Rational>& m);

/// Basis of {v : m v = 0}: one vector per free column (ascending), with a 1 in
/// that column and the negated reduced entries in the pivot columns.
template <Field F>
std::vector<Vector<F>> nullspace(const Matrix<F>& m) {
  const Echelon<F> e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
Matrix<F> invert(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const Echelon<F> e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Unique solution of m x = b for square nonsingular m.
template <Field F>
Vector<F> solve(const Matrix<F>& m, std::span<const F> b) {
  if (!m.is_square() || b.size() != m.rows())
    throw DimensionMismatch("solve needs a square system");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const Echelon<F> e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
  Vector<F> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

template <Field F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

}  // namespace leibniz
