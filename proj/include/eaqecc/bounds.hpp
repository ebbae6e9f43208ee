// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bounds.hpp
 * @brief Singleton- and Griesmer-type upper bounds on EAQECC parameters.
 *
 * Bound ids:
 *   S1  kappa <= c + max(0, n - 2 delta + 2)
 *   S2  kappa <= n - delta + 1
 *   S3  kappa <= (n - delta + 1)(c + 2 delta - 2 - n) / (3 delta - 3 - n),
 *       only when 2(delta - 1) >= n and 3 delta - 3 - n > 0
 *   P   2 delta <= n + c - kappa + 2, for pure codes and for the
 *       Hermitian and CSS-like routes
 *   GH  n + kappa + c >= 2 sum_{i<kappa} ceil(delta / q^(2i)), Hermitian route
 *   GC  n + kappa + c >= 2 sum_{i<kappa} ceil(delta / q^i), CSS-like route
 *
 * Slack is rhs - lhs in integers; for GH/GC it is in doubled units.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eaqecc/params.hpp"

namespace eaqecc {

struct BoundEntry {
  std::string id;
  bool applicable = false;
  std::string reason;  ///< why not applicable, or a note such as "route assumed"
  bool satisfied = true;
  std::int64_t slack = 0;
  bool tight = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  bool consistent() const {
    for (const auto& e : entries)
      if (e.applicable && !e.satisfied) return false;
    return true;
  }

  std::vector<BoundEntry> violations() const {
    std::vector<BoundEntry> v;
    for (const auto& e : entries)
      if (e.applicable && !e.satisfied) v.push_back(e);
    return v;
  }

  const BoundEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

namespace detail {

inline BoundEntry evaluated(std::string id, std::int64_t slack, std::string note = {}) {
  BoundEntry e;
  e.id = std::move(id);
  e.applicable = true;
  e.reason = std::move(note);
  e.slack = slack;
  e.satisfied = slack >= 0;
  e.tight = slack == 0;
  return e;
}

inline BoundEntry skipped(std::string id, std::string reason) {
  BoundEntry e;
  e.id = std::move(id);
  e.reason = std::move(reason);
  return e;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Ints {
  std::int64_t n, k, d, c;
};

inline Ints ints(const EaqeccParams& p) {
  return {static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.kappa), static_cast<std::int64_t>(p.delta.value),
          static_cast<std::int64_t>(p.c)};
}

// sum_{i<count} ceil(d / base^i) with the powers saturating once they exceed d.
inline std::int64_t griesmer_sum(std::int64_t d, std::int64_t base, std::int64_t count) {
  std::int64_t sum = 0, power = 1;
  for (std::int64_t i = 0; i < count; ++i) {
    if (power >= d) {
      sum += (count - i) * (d > 0 ? 1 : 0);
      break;
    }
    sum += (d + power - 1) / power;
    power *= base;
  }
  return sum;
}

// Route the bound check should assume, and whether it was assumed.
inline Route effective_route(const EaqeccParams& p, bool& assumed) {
  assumed = p.route_assumed;
  if (p.route == Route::table) {
    assumed = true;
    return Route::hermitian;
  }
  return p.route;
}

}  // namespace detail

inline std::vector<BoundEntry> check_singleton(const EaqeccParams& p) {
  const auto [n, k, d, c] = detail::ints(p);
  std::vector<BoundEntry> out;
  out.push_back(detail::evaluated("S1", c + std::max<std::int64_t>(0, n - 2 * d + 2) - k));
  out.push_back(detail::evaluated("S2", n - d + 1 - k));
  const std::int64_t den = 3 * d - 3 - n;
  if (2 * (d - 1) < n) {
    out.push_back(detail::skipped("S3", "needs delta - 1 >= n/2"));
  } else if (den <= 0) {
    out.push_back(detail::skipped("S3", "needs 3 delta - 3 - n > 0"));
  } else {
    const std::int64_t num = (n - d + 1) * (c + 2 * d - 2 - n);
    out.push_back(detail::evaluated("S3", detail::floor_div(num, den) - k));
  }
  return out;
}

inline BoundEntry check_pure_bound(const EaqeccParams& p) {
  const auto [n, k, d, c] = detail::ints(p);
  bool assumed = false;
  const Route r = detail::effective_route(p, assumed);
  if (p.purity.is_pure()) return detail::evaluated("P", n + c - k + 2 - 2 * d);
  if (r == Route::hermitian || r == Route::css)
    return detail::evaluated("P", n + c - k + 2 - 2 * d, assumed ? "route assumed" : "");
  return detail::skipped("P", "needs a pure code or a Hermitian/CSS-like route");
}

inline BoundEntry check_griesmer(const EaqeccParams& p, Route route) {
  const auto [n, k, d, c] = detail::ints(p);
  const auto q = static_cast<std::int64_t>(p.q);
  if (route == Route::hermitian) return detail::evaluated("GH", n + k + c - 2 * detail::griesmer_sum(d, q * q, k));
  if (route == Route::css) return detail::evaluated("GC", n + k + c - 2 * detail::griesmer_sum(d, q, k));
  throw PreconditionError("Griesmer-type bound needs the hermitian or css route");
}

inline BoundReport check_all(const EaqeccParams& p) {
  BoundReport r;
  r.entries = check_singleton(p);
  r.entries.push_back(check_pure_bound(p));
  bool assumed = false;
  const Route route = detail::effective_route(p, assumed);
  const std::string note = assumed ? "route assumed" : "";
  if (route == Route::hermitian) {
    auto e = check_griesmer(p, Route::hermitian);
    e.reason = note;
    r.entries.push_back(e);
  } else {
    r.entries.push_back(detail::skipped("GH", "route is not hermitian"));
  }
  if (route == Route::css) {
    auto e = check_griesmer(p, Route::css);
    e.reason = note;
    r.entries.push_back(e);
  } else {
    r.entries.push_back(detail::skipped("GC", "route is not css"));
  }
  return r;
}

/// Consistency gate for constructed parameters. A violated bound means a bug
/// upstream, so it throws std::logic_error. Upper-bound distances are skipped.
inline void require_bound_consistent(const EaqeccParams& p) {
  if (p.delta.certainty == Certainty::upper_bound) return;
  const auto r = check_all(p);
  for (const auto& v : r.violations())
    throw std::logic_error("bound " + v.id + " violated by " + p.str() + " (slack " + std::to_string(v.slack) + ")");
}

}  // namespace eaqecc
