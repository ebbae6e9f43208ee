// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file params.hpp
 * @brief Parameters [[n, kappa, delta; c]]_q of an entanglement-assisted
 * quantum code together with purity, route and provenance.
 */

#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "eaqecc/distance.hpp"

namespace eaqecc {

struct Purity {
  enum class Kind { pure, pure_to_distance, unknown };
  Kind kind = Kind::unknown;
  std::size_t distance = 0;  ///< only for pure_to_distance

  static Purity pure() { return {Kind::pure, 0}; }
  static Purity unknown() { return {Kind::unknown, 0}; }
  static Purity to_distance(std::size_t w) { return {Kind::pure_to_distance, w}; }

  bool is_pure() const noexcept { return kind == Kind::pure; }
  friend bool operator==(const Purity&, const Purity&) = default;

  std::string token() const {
    switch (kind) {
      case Kind::pure: return "pure";
      case Kind::unknown: return "unknown";
      case Kind::pure_to_distance: return "pure_to_distance=" + std::to_string(distance);
    }
    return "unknown";
  }

  static Purity parse(const std::string& s) {
    if (s == "pure") return pure();
    if (s == "unknown") return unknown();
    const std::string prefix = "pure_to_distance=";
    if (s.rfind(prefix, 0) == 0) {
      const std::string num = s.substr(prefix.size());
      if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) return to_distance(std::stoul(num));
    }
    throw PreconditionError("bad purity token '" + s + "'");
  }
};

/// How a parameter set was obtained; decides which bounds apply.
enum class Route { hermitian, css, table, derived, unknown };

inline const char* to_string(Route r) {
  switch (r) {
    case Route::hermitian: return "hermitian";
    case Route::css: return "css";
    case Route::table: return "table";
    case Route::derived: return "derived";
    case Route::unknown: return "unknown";
  }
  return "unknown";
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("fraction with zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
    return {num, den};
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct EaqeccParams {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t kappa = 0;
  DistanceFact delta;
  std::size_t c = 0;
  Purity purity;
  Route route = Route::unknown;
  bool route_assumed = false;
  std::string source;                   ///< single token for record lines
  std::vector<std::string> provenance;  ///< construction/propagation chain, oldest first

  std::size_t distance() const noexcept { return delta.value; }

  Fraction rate() const { return Fraction::make(static_cast<std::int64_t>(kappa), static_cast<std::int64_t>(n)); }
  Fraction net_rate() const {
    return Fraction::make(static_cast<std::int64_t>(kappa) - static_cast<std::int64_t>(c), static_cast<std::int64_t>(n));
  }

  /// "[[6,1,5;3]]_3"; inexact distances print as ">=10" or "<=7".
  std::string str() const {
    std::string d;
    switch (delta.certainty) {
      case Certainty::exact: d = std::to_string(delta.value); break;
      case Certainty::lower_bound: d = ">=" + std::to_string(delta.value); break;
      case Certainty::upper_bound: d = "<=" + std::to_string(delta.value); break;
    }
    return "[[" + std::to_string(n) + "," + std::to_string(kappa) + "," + d + ";" + std::to_string(c) + "]]_" +
           std::to_string(q);
  }

  /// Throws PreconditionError unless 0 <= kappa <= n, 0 <= c <= n - kappa and delta >= 1.
  void validate() const {
    if (n == 0) throw PreconditionError("code length must be positive");
    if (kappa > n) throw PreconditionError("kappa exceeds n in " + str());
    if (c > n - kappa) throw PreconditionError("c exceeds n - kappa in " + str());
    if (delta.value == 0) throw PreconditionError("distance must be positive in " + str());
  }
};

/// Parameters with an exact, cited distance.
inline EaqeccParams make_params(unsigned q, std::size_t n, std::size_t kappa, std::size_t delta, std::size_t c,
                                Purity purity = Purity::unknown(), Route route = Route::unknown,
                                std::string source = "given") {
  EaqeccParams p;
  p.q = q;
  p.n = n;
  p.kappa = kappa;
  p.delta = DistanceFact::make_exact(delta, DistanceMethod::citation);
  p.c = c;
  p.purity = purity;
  p.route = route;
  p.source = std::move(source);
  p.validate();
  return p;
}

/// Same parameter tuple and purity; distance compared by value and certainty.
inline bool same_parameters(const EaqeccParams& a, const EaqeccParams& b) {
  return a.q == b.q && a.n == b.n && a.kappa == b.kappa && a.c == b.c && a.delta.value == b.delta.value &&
         a.delta.certainty == b.delta.certainty && a.purity == b.purity;
}

}  // namespace eaqecc
