// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file code.hpp
 * @brief Linear codes: duals, Hermitian hulls, intersections and the
 * monomial transforms (column scaling and permutation).
 */

#pragma once

#include <numeric>
#include <string>
#include <utility>

#include "eaqecc/matrix.hpp"

namespace eaqecc {

/// A linear [n,k] code given by a full-row-rank generator matrix.
///
/// The generator is kept exactly as supplied (constructions below depend on
/// the particular basis); an RREF copy is cached for membership tests.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator, std::string name = {})
      : generator_(std::move(generator)), name_(std::move(name)), echelon_(rref(generator_)) {
    if (echelon_.rank != generator_.rows())
      throw PreconditionError("generator matrix has rank " + std::to_string(echelon_.rank) + " < " +
                              std::to_string(generator_.rows()) + " rows");
  }

  static LinearCode zero(const Field& f, std::size_t n) { return LinearCode(Matrix(f, 0, n)); }
  static LinearCode full(const Field& f, std::size_t n) { return LinearCode(Matrix::identity(f, n)); }

  const Field& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }
  const std::string& name() const noexcept { return name_; }
  const Matrix& echelon() const noexcept { return echelon_.reduced; }
  const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }

  Vector encode(std::span<const Element> message) const { return generator_.left_multiply(message); }

  /// Membership by reduction against the echelon basis, O(k n).
  bool contains(std::span<const Element> v) const {
    if (v.size() != length()) throw PreconditionError("vector length does not match code length");
    const Field& f = field();
    Vector r(v.begin(), v.end());
    const Matrix& e = echelon_.reduced;
    for (std::size_t i = 0; i < echelon_.rank; ++i) {
      const Element c = r[echelon_.pivots[i]];
      if (c == 0) continue;
      const Element nc = f.neg(c);
      const Element* row = e.row_ptr(i);
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.add(r[j], f.mul(nc, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Element x) { return x == 0; });
  }

  bool contains(const LinearCode& sub) const {
    if (&sub.field() != &field() || sub.length() != length()) return false;
    for (std::size_t i = 0; i < sub.dimension(); ++i)
      if (!contains(sub.generator().row(i))) return false;
    return true;
  }

  friend bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.dimension() == b.dimension() && a.contains(b);
  }

 private:
  Matrix generator_;
  std::string name_;
  RrefResult echelon_;
};

inline void require_same_ambient(const LinearCode& a, const LinearCode& b) {
  if (&a.field() != &b.field()) throw PreconditionError("codes live over different fields");
  if (a.length() != b.length()) throw PreconditionError("codes have different lengths");
}

/// C^perp under sum x_i c_i.
inline LinearCode euclidean_dual(const LinearCode& c) { return LinearCode(kernel(c.generator())); }

/// C^perpH under sum x_i c_i^q, i.e. the kernel of conj(G).
inline LinearCode hermitian_dual(const LinearCode& c) {
  if (!c.field().is_square_order()) throw InvalidFieldError("Hermitian dual needs a code over GF(q^2)");
  return LinearCode(kernel(c.generator().conjugate()));
}

/// G G^dagger
inline Matrix hermitian_gram(const LinearCode& c) { return c.generator() * c.generator().hermitian_transpose(); }

struct Hull {
  Matrix basis;
  std::size_t dimension;
};

/// Hermitian hull C cap C^perpH: the codewords uG with u G G^dagger = 0.
/// dimension = k - rank(G G^dagger).
inline Hull hull_hermitian(const LinearCode& c) {
  if (!c.field().is_square_order()) throw InvalidFieldError("Hermitian hull needs a code over GF(q^2)");
  const Matrix gram = hermitian_gram(c);
  // u gram = 0  <=>  gram^T u^T = 0
  const Matrix coeffs = kernel(gram.transpose());
  Matrix basis = coeffs * c.generator();
  const std::size_t dim = basis.rows();
  return {std::move(basis), dim};
}

inline std::size_t hull_dimension(const LinearCode& c) { return c.dimension() - rank(hermitian_gram(c)); }

inline LinearCode hull_code(const LinearCode& c) { return LinearCode(hull_hermitian(c).basis); }

/// C1 cap C2 as the kernel of the stacked parity-check matrices.
inline LinearCode intersection(const LinearCode& a, const LinearCode& b) {
  require_same_ambient(a, b);
  const Matrix stacked = euclidean_dual(a).generator().vstack(euclidean_dual(b).generator());
  return LinearCode(kernel(stacked));
}

/// G Diag(a_1..a_n); every a_i must be nonzero.
inline LinearCode scale_columns(const LinearCode& c, std::span<const Element> a) {
  if (a.size() != c.length()) throw PreconditionError("scaling vector length does not match code length");
  for (Element x : a)
    if (x == 0) throw PreconditionError("column scaling by zero");
  Matrix g = c.generator();
  const Field& f = c.field();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = f.mul(g(i, j), a[j]);
  return LinearCode(std::move(g), c.name());
}

/// Column j of C moves to position perm[j].
inline LinearCode permute_columns(const LinearCode& c, std::span<const std::size_t> perm) {
  const std::size_t n = c.length();
  if (perm.size() != n) throw PreconditionError("permutation length does not match code length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw PreconditionError("malformed permutation");
    seen[p] = true;
  }
  Matrix g(c.field(), c.dimension(), n);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, perm[j]) = c.generator()(i, j);
  return LinearCode(std::move(g), c.name());
}

/// Code spanned by the rows of G together with extra vectors.
inline LinearCode span_with(const LinearCode& c, const Matrix& extra) {
  return LinearCode(row_basis(c.generator().vstack(extra)));
}

}  // namespace eaqecc
