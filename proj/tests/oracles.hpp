// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations used only by the tests. Field
// arithmetic is done on polynomial coefficients directly (no tables) and
// every code property is computed by listing codewords.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "eaqecc/gf.hpp"
#include "eaqecc/matrix.hpp"

namespace oracle {

using eaqecc::Element;
using Word = std::vector<Element>;

/// GF(p^s) by schoolbook polynomial arithmetic modulo the given monic modulus.
class Arith {
 public:
  explicit Arith(const eaqecc::Field& f) : p_(f.characteristic()), s_(f.degree()), mod_(f.modulus()) {
    q_ = 1;
    for (unsigned i = 0; i < s_; ++i) q_ *= p_;
  }

  unsigned order() const { return q_; }

  Element add(Element a, Element b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < s_; ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }
  Element neg(Element a) const {
    auto x = digits(a);
    for (auto& d : x) d = (p_ - d) % p_;
    return pack(x);
  }
  Element mul(Element a, Element b) const {
    auto x = digits(a), y = digits(b);
    std::vector<unsigned> prod(2 * s_, 0);
    for (unsigned i = 0; i < s_; ++i)
      for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce with x^s = -(m_0 + ... + m_{s-1} x^{s-1}).
    for (unsigned d = 2 * s_ - 1; d >= s_; --d) {
      const unsigned c = prod[d];
      if (c) {
        prod[d] = 0;
        for (unsigned i = 0; i < s_; ++i) prod[d - s_ + i] = (prod[d - s_ + i] + (p_ - (c * mod_[i]) % p_)) % p_;
      }
      if (d == s_) break;
    }
    prod.resize(s_);
    return pack(prod);
  }
  Element pow(Element a, unsigned e) const {
    Element r = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  /// x^sqrt(order) for a field of square order.
  Element conj(Element a) const { return pow(a, base()); }
  unsigned base() const {
    unsigned b = 1;
    for (unsigned i = 0; i < s_ / 2; ++i) b *= p_;
    return b;
  }

  Element hermitian(const Word& x, const Word& y) const {
    Element s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = add(s, mul(x[i], conj(y[i])));
    return s;
  }
  Element euclidean(const Word& x, const Word& y) const {
    Element s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = add(s, mul(x[i], y[i]));
    return s;
  }

 private:
  std::vector<unsigned> digits(Element a) const {
    std::vector<unsigned> d(s_);
    unsigned v = a;
    for (unsigned i = 0; i < s_; ++i) d[i] = v % p_, v /= p_;
    return d;
  }
  Element pack(const std::vector<unsigned>& d) const {
    unsigned v = 0;
    for (unsigned i = s_; i-- > 0;) v = v * p_ + d[i];
    return static_cast<Element>(v);
  }

  unsigned p_, s_, q_ = 1;
  std::vector<unsigned> mod_;
};

inline std::size_t weight(const Word& w) {
  std::size_t c = 0;
  for (Element x : w) c += x != 0;
  return c;
}

/// Every vector of the row space of `rows` (all q^k combinations, deduplicated).
inline std::set<Word> span(const Arith& a, const std::vector<Word>& rows, std::size_t n) {
  std::set<Word> out;
  const unsigned q = a.order();
  std::vector<unsigned> coeff(rows.size(), 0);
  for (;;) {
    Word w(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) w[j] = a.add(w[j], a.mul(static_cast<Element>(coeff[i]), rows[i][j]));
    out.insert(w);
    std::size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == q) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  return out;
}

inline std::vector<Word> rows_of(const eaqecc::Matrix& m) {
  std::vector<Word> r;
  for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(m.row_vec(i));
  return r;
}

/// Number of field elements to the power dim, inverted: log_q |S|.
inline std::size_t log_size(const Arith& a, std::size_t size) {
  std::size_t d = 0;
  while (size > 1) size /= a.order(), ++d;
  return d;
}

inline std::size_t rank(const Arith& a, const eaqecc::Matrix& m) {
  return log_size(a, span(a, rows_of(m), m.cols()).size());
}

/// Smallest nonzero weight in the span, or n + 1 for the zero space.
inline std::size_t distance(const Arith& a, const eaqecc::Matrix& g) {
  std::size_t best = g.cols() + 1;
  for (const auto& w : span(a, rows_of(g), g.cols()))
    if (weight(w) && weight(w) < best) best = weight(w);
  return best;
}

/// Smallest weight in span(big) \ span(sub); n + 1 when the difference is empty.
inline std::size_t distance_outside(const Arith& a, const eaqecc::Matrix& big, const eaqecc::Matrix& sub) {
  const auto s = span(a, rows_of(sub), sub.cols());
  std::size_t best = big.cols() + 1;
  for (const auto& w : span(a, rows_of(big), big.cols()))
    if (!s.count(w) && weight(w) < best) best = weight(w);
  return best;
}

/// Codewords of span(g) Hermitian-orthogonal to every codeword: the hull.
inline std::set<Word> hull(const Arith& a, const eaqecc::Matrix& g) {
  const auto rows = rows_of(g);
  std::set<Word> out;
  for (const auto& w : span(a, rows, g.cols())) {
    bool orth = true;
    for (const auto& r : rows) orth = orth && a.hermitian(w, r) == 0;
    if (orth) out.insert(w);
  }
  return out;
}

/// All vectors of GF^n orthogonal to the rows of g (Hermitian or Euclidean). Only for tiny n.
inline std::set<Word> dual(const Arith& a, const eaqecc::Matrix& g, bool hermitian) {
  const std::size_t n = g.cols();
  const auto rows = rows_of(g);
  std::set<Word> out;
  Word w(n, 0);
  for (;;) {
    bool orth = true;
    for (const auto& r : rows) orth = orth && (hermitian ? a.hermitian(w, r) : a.euclidean(w, r)) == 0;
    if (orth) out.insert(w);
    std::size_t pos = 0;
    while (pos < n && ++w[pos] == a.order()) w[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace oracle
