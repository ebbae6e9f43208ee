// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gf.hpp
 * @brief Table-driven arithmetic in small finite fields GF(p^s), p^s <= 256.
 *
 * Elements are plain integers in [0, p^s). The integer encodes the
 * coefficient vector of the residue polynomial in base p, constant term
 * least significant, so in GF(9) = GF(3)[w]/(w^2 + 2w + 2):
 *
 *   0 -> 0      1 -> 1      2 -> 2
 *   w -> 3      w+1 -> 4    w+2 -> 5
 *   2w -> 6     2w+1 -> 7   2w+2 -> 8
 *
 * and the powers of the primitive root are
 *
 *   w^0 = 1, w^1 = 3, w^2 = 4, w^3 = 7, w^4 = 2, w^5 = 6, w^6 = 8, w^7 = 5.
 *
 * Fields are interned: Field::of(order) returns a reference that stays valid
 * for the lifetime of the program and may be shared freely across threads.
 */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eaqecc/error.hpp"

namespace eaqecc {

using Element = std::uint8_t;

namespace detail {

// Polynomials over GF(p), coefficient vectors with the constant term first.
using Poly = std::vector<unsigned>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  unsigned lead_inv = 1;
  while ((lead_inv * m.back()) % p != 1) ++lead_inv;
  while (a.size() > dm) {
    const unsigned f = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - f * m[i] % p) % p;
    poly_trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& m, unsigned p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly f(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) f[i] = static_cast<unsigned>(c % p);
      f[d] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

inline bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace detail

class Field {
 public:
  /// Interned field of the given order; throws InvalidFieldError unless the
  /// order is a prime power no larger than 256.
  static const Field& of(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const Field>> registry;
    std::lock_guard lock(mutex);
    auto it = registry.find(order);
    if (it == registry.end()) it = registry.emplace(order, std::unique_ptr<const Field>(new Field(order))).first;
    return *it->second;
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return s_; }
  unsigned order() const noexcept { return order_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  /// True for GF(q^2); the Hermitian machinery needs this.
  bool is_square_order() const noexcept { return s_ % 2 == 0; }
  /// q for a field of order q^2.
  unsigned base_order() const {
    require_square("base_order");
    return q_;
  }

  bool contains(unsigned x) const noexcept { return x < order_; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element sub(Element a, Element b) const noexcept { return add_[a * order_ + neg_[b]]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }

  Element inv(Element a) const {
    if (a == 0) throw PreconditionError("GF(" + std::to_string(order_) + "): inverse of zero");
    return inv_[a];
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const noexcept {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Frobenius x -> x^q relative to the subfield GF(q) of GF(q^2).
  Element conj(Element x) const {
    require_square("conj");
    return conj_[x];
  }

  /// x^(q+1), which always lies in GF(q).
  Element norm(Element x) const {
    require_square("norm");
    return norm_[x];
  }

  /// Smallest encoded alpha with alpha^(q+1) == target. target must lie in GF(q).
  Element solve_norm(Element target) const {
    require_square("solve_norm");
    if (!in_base_subfield(target))
      throw PreconditionError("solve_norm: target " + std::to_string(target) + " not in GF(" + std::to_string(q_) + ")");
    for (unsigned a = 0; a < order_; ++a)
      if (norm_[a] == target) return static_cast<Element>(a);
    throw std::logic_error("solve_norm: norm map not onto the subfield");
  }

  bool in_base_subfield(Element x) const {
    require_square("in_base_subfield");
    return conj_[x] == x;
  }

  /// Elements of GF(q) inside GF(q^2), ascending by encoding.
  const std::vector<Element>& base_subfield() const {
    require_square("base_subfield");
    return subfield_;
  }

  /// Human readable form: "0" or "w^k" relative to the smallest primitive element.
  std::string power_form(Element x) const {
    if (x == 0) return "0";
    if (x == 1) return "1";
    return "w^" + std::to_string(log_[x]);
  }
  Element primitive() const noexcept { return primitive_; }
  /// primitive()^k
  Element exp(unsigned k) const noexcept { return exp_[k % (order_ - 1)]; }

 private:
  explicit Field(unsigned order) : order_(order) {
    if (order < 2 || order > 256) throw InvalidFieldError("unsupported field order " + std::to_string(order));
    p_ = 0;
    for (unsigned d = 2; d <= order; ++d)
      if (order % d == 0) {
        p_ = d;
        break;
      }
    unsigned v = order;
    s_ = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++s_;
    }
    if (v != 1 || !detail::is_prime(p_)) throw InvalidFieldError(std::to_string(order) + " is not a prime power");
    choose_modulus();
    build_tables();
  }

  void require_square(const char* what) const {
    if (!is_square_order())
      throw InvalidFieldError(std::string(what) + " needs a field of square order, got GF(" + std::to_string(order_) + ")");
  }

  void choose_modulus() {
    if (s_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    // Fixed bases so that matrices written in powers of w transcribe verbatim.
    if (order_ == 4) modulus_ = {1, 1, 1};
    if (order_ == 9) modulus_ = {2, 2, 1};
    if (!modulus_.empty()) {
      if (!detail::is_irreducible(modulus_, p_)) throw std::logic_error("fixed modulus is reducible");
      return;
    }
    for (unsigned code = 0; code < order_; ++code) {
      detail::Poly m(s_ + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < s_; ++i, c /= p_) m[i] = c % p_;
      m[s_] = 1;
      if (detail::is_irreducible(m, p_)) {
        modulus_ = m;
        return;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  detail::Poly decode(unsigned x) const {
    detail::Poly a(s_, 0);
    for (unsigned i = 0; i < s_; ++i, x /= p_) a[i] = x % p_;
    return a;
  }

  unsigned encode(const detail::Poly& a) const {
    unsigned x = 0;
    for (std::size_t i = a.size(); i-- > 0;) x = x * p_ + a[i];
    return x;
  }

  void build_tables() {
    const unsigned n = order_;
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
      const auto pa = decode(a);
      detail::Poly na(s_);
      for (unsigned i = 0; i < s_; ++i) na[i] = (p_ - pa[i]) % p_;
      neg_[a] = static_cast<Element>(encode(na));
      for (unsigned b = 0; b < n; ++b) {
        const auto pb = decode(b);
        detail::Poly sum(s_);
        for (unsigned i = 0; i < s_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
        add_[a * n + b] = static_cast<Element>(encode(sum));
        detail::Poly prod(2 * s_, 0);
        for (unsigned i = 0; i < s_; ++i)
          for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        auto r = detail::poly_mod(prod, modulus_, p_);
        r.resize(s_, 0);
        mul_[a * n + b] = static_cast<Element>(encode(r));
      }
    }
    for (unsigned a = 1; a < n; ++a)
      for (unsigned b = 1; b < n; ++b)
        if (mul_[a * n + b] == 1) inv_[a] = static_cast<Element>(b);

    // Smallest primitive element; powers and discrete logs.
    for (unsigned g = 1; g < n; ++g) {
      unsigned x = 1, ord = 0;
      do {
        x = mul_[x * n + g];
        ++ord;
      } while (x != 1);
      if (ord == n - 1) {
        primitive_ = static_cast<Element>(g);
        break;
      }
    }
    exp_.assign(n - 1, 0);
    log_.assign(n, 0);
    unsigned x = 1;
    for (unsigned k = 0; k + 1 < n; ++k) {
      exp_[k] = static_cast<Element>(x);
      log_[x] = k;
      x = mul_[x * n + primitive_];
    }

    if (is_square_order()) {
      q_ = 1;
      for (unsigned i = 0; i < s_ / 2; ++i) q_ *= p_;
      conj_.assign(n, 0);
      norm_.assign(n, 0);
      for (unsigned a = 0; a < n; ++a) {
        conj_[a] = pow(static_cast<Element>(a), q_);
        norm_[a] = mul(conj_[a], static_cast<Element>(a));
        if (conj_[a] == a) subfield_.push_back(static_cast<Element>(a));
      }
    }
  }

  unsigned order_, p_ = 0, s_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_, conj_, norm_, exp_, subfield_;
  std::vector<unsigned> log_;
  Element primitive_ = 1;
};

}  // namespace eaqecc
