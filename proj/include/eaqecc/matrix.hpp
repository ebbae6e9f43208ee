// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matrix.hpp
 * @brief Dense matrices over a small finite field.
 *
 * Row-major storage of Element values. All operations are pure and return
 * new matrices; a Matrix is a cheap-to-move value.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eaqecc/error.hpp"
#include "eaqecc/gf.hpp"

namespace eaqecc {

using Vector = std::vector<Element>;

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Element> data)
      : field_(&f), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw PreconditionError("matrix data size does not match shape");
    for (Element x : data_)
      if (!f.contains(x)) throw PreconditionError("matrix entry " + std::to_string(x) + " outside the field");
  }

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw PreconditionError("ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row_ptr(i));
    }
    return m;
  }
  static Matrix row_vector(const Field& f, const Vector& v) { return from_rows(f, {v}, v.size()); }
  static Matrix diagonal(const Field& f, const Vector& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  const Field& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Element* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Element* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<const Element> row(std::size_t i) const { return {row_ptr(i), cols_}; }
  Vector row_vec(std::size_t i) const { return Vector(row_ptr(i), row_ptr(i) + cols_); }
  Vector col_vec(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<Element>& data() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Element x) { return x == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Entrywise Frobenius x -> x^q.
  Matrix conjugate() const {
    Matrix t(*this);
    for (auto& x : t.data_) x = field_->conj(x);
    return t;
  }

  /// The n x k matrix whose columns are the conjugated rows.
  Matrix hermitian_transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = field_->conj((*this)(i, j));
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw PreconditionError("matrix product across fields");
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
    const Field& f = *a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Element x = a(i, l);
        if (x == 0) continue;
        const Element* br = b.row_ptr(l);
        Element* cr = c.row_ptr(i);
        for (std::size_t j = 0; j < b.cols_; ++j) cr[j] = f.add(cr[j], f.mul(x, br[j]));
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum shape mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    return c;
  }

  /// v * M for a row vector v.
  Vector left_multiply(std::span<const Element> v) const {
    if (v.size() != rows_) throw PreconditionError("vector-matrix shape mismatch");
    const Field& f = *field_;
    Vector out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (v[i] == 0) continue;
      const Element* r = row_ptr(i);
      for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(v[i], r[j]));
    }
    return out;
  }

  Matrix hstack(const Matrix& right) const {
    if (right.field_ != field_ || right.rows_ != rows_) throw PreconditionError("hstack shape mismatch");
    Matrix m(*field_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::copy(row_ptr(i), row_ptr(i) + cols_, m.row_ptr(i));
      std::copy(right.row_ptr(i), right.row_ptr(i) + right.cols_, m.row_ptr(i) + cols_);
    }
    return m;
  }

  Matrix vstack(const Matrix& below) const {
    if (below.field_ != field_ || below.cols_ != cols_) throw PreconditionError("vstack shape mismatch");
    Matrix m(*field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(*field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) std::copy(row_ptr(idx[i]), row_ptr(idx[i]) + cols_, m.row_ptr(i));
    return m;
  }

  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix m(*field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  // Elementary row operations.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + cols_, row_ptr(b));
  }
  void scale_row(std::size_t i, Element s) {
    Element* r = row_ptr(i);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = field_->mul(s, r[j]);
  }
  /// row[dst] += s * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Element s) {
    if (s == 0) return;
    Element* d = row_ptr(dst);
    const Element* r = row_ptr(src);
    for (std::size_t j = 0; j < cols_; ++j) d[j] = field_->add(d[j], field_->mul(s, r[j]));
  }

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Columns are scanned in `column_order` when
/// given (pivots then come out in that preference order), else left to right.
inline RrefResult rref(Matrix m, std::span<const std::size_t> column_order = {}) {
  const Field& f = m.field();
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) order[j] = j;
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col : order) {
    if (r == m.rows()) break;
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    m.scale_row(r, f.inv(m(r, col)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, col) != 0) m.add_row_multiple(i, r, f.neg(m(i, col)));
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Rows of the RREF with the zero rows dropped.
inline Matrix row_basis(const Matrix& m) {
  auto r = rref(m);
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  return r.reduced.select_rows(keep);
}

/// Basis of the right null space {v : M v^T = 0}, one basis vector per row.
inline Matrix kernel(const Matrix& m) {
  const Field& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix basis(f, free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    basis(b, free_cols[b]) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(b, r.pivots[i]) = f.neg(r.reduced(i, free_cols[b]));
  }
  return basis;
}

/// Inverse of a square nonsingular matrix.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto r = rref(m.hstack(Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) throw PreconditionError("matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return r.reduced.select_cols(right);
}

inline bool is_hermitian(const Matrix& a) { return a.rows() == a.cols() && a.hermitian_transpose() == a; }

struct CongruenceResult {
  Matrix transform;  ///< nonsingular D
  std::size_t rank;  ///< number of ones on the diagonal of D A D^dagger
};

namespace detail {

// Applies row operation E to (M, D) and the conjugate column operation to M,
// keeping M = D A D^dagger.
struct CongruenceState {
  Matrix work;
  Matrix transform;

  void swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    work.swap_rows(a, b);
    for (std::size_t i = 0; i < work.rows(); ++i) std::swap(work(i, a), work(i, b));
    transform.swap_rows(a, b);
  }
  // row_dst += s row_src; col_dst += conj(s) col_src
  void add(std::size_t dst, std::size_t src, Element s) {
    if (s == 0) return;
    const Field& f = work.field();
    work.add_row_multiple(dst, src, s);
    const Element cs = f.conj(s);
    for (std::size_t i = 0; i < work.rows(); ++i) work(i, dst) = f.add(work(i, dst), f.mul(cs, work(i, src)));
    transform.add_row_multiple(dst, src, s);
  }
  void scale(std::size_t i, Element s) {
    const Field& f = work.field();
    work.scale_row(i, s);
    const Element cs = f.conj(s);
    for (std::size_t r = 0; r < work.rows(); ++r) work(r, i) = f.mul(cs, work(r, i));
    transform.scale_row(i, s);
  }
};

}  // namespace detail

/// Finds a nonsingular D with D A D^dagger = Diag(1,...,1,0,...,0) for a
/// Hermitian A over GF(q^2). The elimination order is deterministic.
inline CongruenceResult hermitian_congruence_diagonalize(const Matrix& a) {
  const Field& f = a.field();
  if (!f.is_square_order()) throw InvalidFieldError("Hermitian congruence needs GF(q^2)");
  if (!is_hermitian(a)) throw PreconditionError("matrix is not Hermitian");
  const std::size_t n = a.rows();
  detail::CongruenceState st{a, Matrix::identity(f, n)};
  Matrix& m = st.work;
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t piv = n;
    for (std::size_t i = t; i < n; ++i)
      if (m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: make a diagonal entry nonzero from an off-diagonal one.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n && pi == n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (i != j && m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      // New (pi,pi) entry is s*conj(b) + conj(s)*b = Tr(s*conj(b)) with b = m(pi,pj).
      const Element b = m(pi, pj);
      for (unsigned s = 1; s < f.order(); ++s) {
        const Element x = f.mul(static_cast<Element>(s), f.conj(b));
        if (f.add(x, f.conj(x)) != 0) {
          st.add(pi, pj, static_cast<Element>(s));
          break;
        }
      }
      piv = pi;
    }
    st.swap(t, piv);
    const Element d = m(t, t);
    for (std::size_t i = t + 1; i < n; ++i)
      if (m(i, t) != 0) st.add(i, t, f.neg(f.div(m(i, t), d)));
    // d lies in GF(q); rescale so the pivot becomes 1.
    st.scale(t, f.solve_norm(f.inv(d)));
  }
  return {std::move(st.transform), t};
}

}  // namespace eaqecc
