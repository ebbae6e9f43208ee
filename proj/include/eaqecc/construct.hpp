// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file construct.hpp
 * @brief EAQECC parameters from classical codes.
 *
 * Hermitian route, for an [n,k] code C over GF(q^2) with hull dimension l:
 *
 *   c = k - l,  kappa = n - 2k + c,
 *   delta = wt(C^perpH)                 if C^perpH is inside C,
 *           wt(C^perpH \ (C cap C^perpH)) otherwise.
 *
 * CSS-like route, for [n,k1] and [n,k2] codes over GF(q):
 *
 *   c = k1 - dim(C1 cap C2^perp) = rank(G1 G2^T),  kappa = n - (k1 + k2) + c,
 *   delta = min(wt(C1^perp), wt(C2^perp))  if C1^perp is inside C2,
 *           min(wt(C1^perp \ (C2 cap C1^perp)), wt(C2^perp \ (C1 cap C2^perp))) otherwise.
 *
 * The zero code has weight n + 1, which yields [[n,0,n+1;n]] from the full space.
 */

#pragma once

#include <string>

#include "eaqecc/bounds.hpp"
#include "eaqecc/code.hpp"
#include "eaqecc/distance.hpp"
#include "eaqecc/params.hpp"

namespace eaqecc {

namespace detail {

inline std::string code_label(const LinearCode& c) {
  std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
                  std::to_string(c.field().order());
  if (!c.name().empty()) s = c.name() + " " + s;
  return s;
}

// Weight of big \ sub, tolerating an empty difference (weight n + 1).
inline DistanceFact weight_outside_or_convention(const LinearCode& big, const LinearCode& sub,
                                                 const DistanceOptions& opts) {
  if (sub.dimension() == big.dimension()) return DistanceFact::make_exact(big.length() + 1, DistanceMethod::convention);
  return min_weight_outside(big, sub, opts);
}

// Combines a relative-distance fact with the plain distance of the same code:
// the relative distance is never below the plain one.
inline DistanceFact tighten_relative(DistanceFact rel, const DistanceFact& plain) {
  if (!rel.exact() && plain.lower > rel.lower) {
    rel.lower = plain.lower;
    if (rel.certainty == Certainty::lower_bound) rel.value = rel.lower;
    if (rel.upper != kNoBound && rel.lower >= rel.upper) {
      rel.value = rel.upper;
      rel.certainty = Certainty::exact;
      rel.lower = rel.upper;
    }
  }
  return rel;
}

inline DistanceFact min_of(const DistanceFact& a, const DistanceFact& b) {
  if (a.exact() && b.exact()) return a.value <= b.value ? a : b;
  // min over brackets: lower = min of lowers, upper = min of uppers.
  const std::size_t lo = std::min(a.lower, b.lower);
  const std::size_t up = std::min(a.upper, b.upper);
  const DistanceFact& w = a.upper <= b.upper ? a : b;
  if (lo >= up) return DistanceFact::make_exact(up, w.method, w.witness);
  return DistanceFact::make_lower(lo, up, a.exact() ? b.method : a.method, w.witness);
}

}  // namespace detail

/// Parameters of the code built from C over GF(q^2) by the Hermitian route.
inline EaqeccParams hermitian_construct(const LinearCode& code, const DistanceOptions& opts = {}) {
  const Field& f = code.field();
  if (!f.is_square_order()) throw InvalidFieldError("Hermitian construction needs a code over GF(q^2)");
  const std::size_t n = code.length(), k = code.dimension();
  const Hull hull = hull_hermitian(code);
  const std::size_t l = hull.dimension;

  EaqeccParams p;
  p.q = f.base_order();
  p.n = n;
  p.c = k - l;
  p.kappa = n + p.c - 2 * k;
  p.route = Route::hermitian;
  p.source = "hermitian";
  p.provenance.push_back("hermitian " + detail::code_label(code));

  const LinearCode dual = hermitian_dual(code);
  if (dual.dimension() == 0) {
    p.delta = DistanceFact::make_exact(n + 1, DistanceMethod::convention);
    p.purity = Purity::pure();
  } else if (code.contains(dual)) {
    p.delta = min_distance(dual, opts);
    p.purity = p.delta.exact() ? Purity::pure() : Purity::unknown();
  } else {
    const DistanceFact plain = min_distance(dual, opts);
    const LinearCode hull_c(hull.basis);
    if (l == 0 || (plain.exact() && !hull_c.contains(plain.witness))) {
      p.delta = plain;
      p.purity = plain.exact() ? Purity::pure() : Purity::unknown();
    } else {
      p.delta = detail::tighten_relative(min_weight_outside(dual, hull_c, opts), plain);
      if (p.delta.exact() && plain.exact())
        p.purity = p.delta.value == plain.value ? Purity::pure() : Purity::to_distance(plain.value);
      else
        p.purity = Purity::unknown();
    }
  }
  p.validate();
  require_bound_consistent(p);
  return p;
}

/// c computed both ways; throws std::logic_error if they disagree.
inline std::size_t css_entanglement(const LinearCode& c1, const LinearCode& c2) {
  require_same_ambient(c1, c2);
  const std::size_t via_intersection = c1.dimension() - intersection(c1, euclidean_dual(c2)).dimension();
  const std::size_t via_rank = rank(c1.generator() * c2.generator().transpose());
  if (via_intersection != via_rank)
    throw std::logic_error("CSS entanglement mismatch: " + std::to_string(via_intersection) + " vs rank " +
                           std::to_string(via_rank));
  return via_rank;
}

/// Parameters of the code built from the pair (C1, C2) over GF(q) by the CSS-like route.
inline EaqeccParams css_construct(const LinearCode& c1, const LinearCode& c2, const DistanceOptions& opts = {}) {
  require_same_ambient(c1, c2);
  const std::size_t n = c1.length();
  EaqeccParams p;
  p.q = c1.field().order();
  p.n = n;
  p.c = css_entanglement(c1, c2);
  p.kappa = n + p.c - c1.dimension() - c2.dimension();
  p.route = Route::css;
  p.source = "css";
  p.provenance.push_back("css " + detail::code_label(c1) + " " + detail::code_label(c2));

  const LinearCode d1 = euclidean_dual(c1), d2 = euclidean_dual(c2);
  const DistanceFact w1 = min_distance(d1, opts), w2 = min_distance(d2, opts);
  const DistanceFact plain = detail::min_of(w1, w2);
  if (c2.contains(d1)) {
    p.delta = plain;
  } else {
    const DistanceFact r1 = detail::tighten_relative(
        detail::weight_outside_or_convention(d1, intersection(c2, d1), opts), w1);
    const DistanceFact r2 = detail::tighten_relative(
        detail::weight_outside_or_convention(d2, intersection(c1, d2), opts), w2);
    p.delta = detail::min_of(r1, r2);
  }
  if (p.delta.exact() && plain.exact())
    p.purity = p.delta.value == plain.value ? Purity::pure() : Purity::to_distance(plain.value);
  if (p.kappa == 0 && p.delta.exact()) p.purity = Purity::pure();
  p.validate();
  require_bound_consistent(p);
  return p;
}

}  // namespace eaqecc
