// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "eaqecc/matrix.hpp"

namespace eaqecc {

/// Seeded generator with a portable draw; identical sequences on every
/// standard library, unlike std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  Element element(const Field& f) { return static_cast<Element>(below(f.order())); }
  Element nonzero(const Field& f) { return static_cast<Element>(1 + below(f.order() - 1)); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(f);
  return m;
}

/// Random matrix of full row rank (rows <= cols), by rejection.
inline Matrix random_full_rank(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw PreconditionError("full row rank needs rows <= cols");
  for (;;) {
    Matrix m = random_matrix(f, rows, cols, rng);
    if (rank(m) == rows) return m;
  }
}

/// Congruence diagonalization preceded by a random nonsingular change of
/// basis, giving a seeded variety of transforms D for searches.
inline CongruenceResult hermitian_congruence_diagonalize_randomized(const Matrix& a, Rng& rng) {
  const Matrix r = random_full_rank(a.field(), a.rows(), a.rows(), rng);
  auto inner = hermitian_congruence_diagonalize(r * a * r.hermitian_transpose());
  return {inner.transform * r, inner.rank};
}

}  // namespace eaqecc
