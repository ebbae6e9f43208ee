// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file distance.hpp
 * @brief Minimum weight of a linear code, optionally restricted to the
 * codewords outside a given subcode.
 *
 * Two strategies:
 *
 *  - enumeration: visits one representative of every one-dimensional
 *    subspace (leading message coefficient 1) with incremental updates.
 *  - information sets: Brouwer-Zimmermann. The columns are covered by
 *    information sets I_1, I_2, ... chosen greedily so that the j-th one adds
 *    r_j columns not used before. After enumerating all messages of weight
 *    <= w in systematic form on every I_j, any codeword not yet seen has
 *    weight at least sum_j max(0, w + 1 - (k - r_j)). The search stops once
 *    that lower bound reaches the best weight found.
 *
 * A result is only ever tagged exact when one of the two strategies proved
 * it; if the work limit runs out the returned fact carries the bracket.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "eaqecc/code.hpp"

namespace eaqecc {

enum class Certainty { exact, lower_bound, upper_bound };
enum class DistanceMethod { enumeration, information_sets, witness, convention, theorem, citation };

inline const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::exact: return "exact";
    case Certainty::lower_bound: return "lower_bound";
    case Certainty::upper_bound: return "upper_bound";
  }
  return "?";
}

inline const char* to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::enumeration: return "enumeration";
    case DistanceMethod::information_sets: return "information_sets";
    case DistanceMethod::witness: return "witness";
    case DistanceMethod::convention: return "convention";
    case DistanceMethod::theorem: return "theorem";
    case DistanceMethod::citation: return "citation";
  }
  return "?";
}

inline constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();

/// What is known about a minimum weight.
///
/// value is the exact weight, or the bound named by certainty. lower/upper
/// always hold the best bracket known; upper == kNoBound when nothing better
/// than the trivial bound is known. An exact fact carries a witness, except
/// for the zero-code convention (weight n + 1).
struct DistanceFact {
  std::size_t value = 0;
  Certainty certainty = Certainty::exact;
  DistanceMethod method = DistanceMethod::enumeration;
  Vector witness;
  std::size_t lower = 0;
  std::size_t upper = kNoBound;
  std::uint64_t work = 0;  ///< codewords visited

  bool exact() const noexcept { return certainty == Certainty::exact; }

  static DistanceFact make_exact(std::size_t v, DistanceMethod m, Vector w = {}) {
    DistanceFact f;
    f.value = f.lower = f.upper = v;
    f.certainty = Certainty::exact;
    f.method = m;
    f.witness = std::move(w);
    return f;
  }
  static DistanceFact make_lower(std::size_t lo, std::size_t up, DistanceMethod m, Vector w = {}) {
    DistanceFact f;
    f.value = f.lower = lo;
    f.upper = up;
    f.certainty = Certainty::lower_bound;
    f.method = m;
    f.witness = std::move(w);
    return f;
  }
  static DistanceFact make_upper(std::size_t up, DistanceMethod m, Vector w = {}) {
    DistanceFact f;
    f.value = f.upper = up;
    f.lower = 1;
    f.certainty = Certainty::upper_bound;
    f.method = m;
    f.witness = std::move(w);
    return f;
  }

  /// "11", ">=10 (<=12)", "<=7", used by reports.
  std::string describe() const {
    switch (certainty) {
      case Certainty::exact: return std::to_string(value);
      case Certainty::lower_bound:
        return ">=" + std::to_string(lower) + (upper != kNoBound ? " (<=" + std::to_string(upper) + ")" : "");
      case Certainty::upper_bound: return "<=" + std::to_string(upper);
    }
    return "?";
  }
};

struct DistanceOptions {
  enum class Strategy { automatic, enumerate, information_sets };
  Strategy strategy = Strategy::automatic;
  /// automatic uses full enumeration when q^k is at most this many codewords.
  std::uint64_t enum_cap = 100'000'000;
  /// Stop after visiting this many codewords (0 = no limit).
  std::uint64_t work_limit = 0;
};

inline std::size_t weight(std::span<const Element> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element x) { return x != 0; }));
}

/// q^e saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

namespace detail {

class WeightSearch {
 public:
  WeightSearch(const LinearCode& code, const LinearCode* exclude, const DistanceOptions& opts)
      : code_(code), exclude_(exclude), opts_(opts), f_(code.field()), n_(code.length()), k_(code.dimension()) {}

  DistanceFact enumerate() {
    const unsigned q = f_.order();
    const Matrix& g = code_.generator();
    Vector word(n_), coeff(k_);
    for (std::size_t lead = 0; lead < k_; ++lead) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[lead] = 1;
      std::copy(g.row_ptr(lead), g.row_ptr(lead) + n_, word.begin());
      for (;;) {
        if (budget_exhausted()) return partial(DistanceMethod::enumeration, 1);
        visit_full(word);
        // Odometer over coefficients lead+1 .. k-1.
        bool advanced = false;
        for (std::size_t pos = k_; pos > lead + 1 && !advanced;) {
          --pos;
          const Element old = coeff[pos];
          const Element next = static_cast<Element>((old + 1) % q);
          coeff[pos] = next;
          add_scaled(word, g.row_ptr(pos), f_.sub(next, old));
          advanced = next != 0;
        }
        if (!advanced) break;
      }
    }
    return finish_exhaustive(DistanceMethod::enumeration);
  }

  DistanceFact information_sets() {
    build_information_sets();
    const unsigned q = f_.order();
    std::size_t lower = 1;
    for (std::size_t w = 1; w <= k_; ++w) {
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (!enumerate_weight(sets_[j], w, q)) return partial(DistanceMethod::information_sets, lower);
        lower = bound_after(w, j);
        if (best_ != kNoBound && best_ <= lower) return finish_exhaustive(DistanceMethod::information_sets);
      }
    }
    return finish_exhaustive(DistanceMethod::information_sets);
  }

 private:
  struct InfoSet {
    std::size_t rank_new;
    std::vector<std::size_t> info_cols;  // pivot column of message coordinate i
    std::vector<std::size_t> red_cols;   // remaining columns, ascending
    // scaled[(i * q + s) * r + t] = s * G_j(i, red_cols[t])
    std::vector<Element> scaled;
  };

  void build_information_sets() {
    const unsigned q = f_.order();
    std::vector<bool> used(n_, false);
    for (;;) {
      std::vector<std::size_t> order;
      for (std::size_t j = 0; j < n_; ++j)
        if (!used[j]) order.push_back(j);
      const std::size_t fresh = order.size();
      if (fresh == 0) break;
      for (std::size_t j = 0; j < n_; ++j)
        if (used[j]) order.push_back(j);
      auto r = rref(code_.generator(), order);
      InfoSet s;
      s.rank_new = 0;
      std::vector<bool> is_pivot(n_, false);
      for (auto p : r.pivots) {
        is_pivot[p] = true;
        if (!used[p]) ++s.rank_new;
      }
      if (s.rank_new == 0) break;
      s.info_cols = r.pivots;
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_pivot[j]) s.red_cols.push_back(j);
      const std::size_t red = s.red_cols.size();
      s.scaled.assign(k_ * q * red, 0);
      for (std::size_t i = 0; i < k_; ++i)
        for (unsigned a = 0; a < q; ++a)
          for (std::size_t t = 0; t < red; ++t)
            s.scaled[(i * q + a) * red + t] = f_.mul(static_cast<Element>(a), r.reduced(i, s.red_cols[t]));
      for (auto p : r.pivots) used[p] = true;
      sets_.push_back(std::move(s));
      (void)fresh;
    }
  }

  // Lower bound on unseen codewords after finishing round w up to set j.
  std::size_t bound_after(std::size_t w, std::size_t j) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const std::size_t done = i <= j ? w : w - 1;
      const std::size_t old_cols = k_ - sets_[i].rank_new;
      if (done + 1 > old_cols) total += done + 1 - old_cols;
    }
    return total;
  }

  // All messages of weight w (leading coefficient 1). false when out of budget.
  bool enumerate_weight(const InfoSet& s, std::size_t w, unsigned q) {
    const std::size_t red = s.red_cols.size();
    std::vector<std::size_t> comb(w);
    for (std::size_t i = 0; i < w; ++i) comb[i] = i;
    std::vector<Element> val(w, 1);
    Vector acc(red);
    for (;;) {
      std::fill(val.begin(), val.end(), 1);
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < w; ++i) add_into(acc, &s.scaled[(comb[i] * q + 1) * red]);
      for (;;) {
        if (budget_exhausted()) return false;
        ++work_;
        const std::size_t wt = w + weight_below(acc, best_ == kNoBound ? kNoBound : best_ - w);
        if (wt < best_) consider(s, comb, val, acc, wt);
        // Odometer over the nonzero values of positions 1..w-1.
        std::size_t pos = w;
        bool advanced = false;
        while (pos > 1) {
          --pos;
          const Element old = val[pos];
          const Element next = old + 1u < q ? static_cast<Element>(old + 1) : Element{1};
          val[pos] = next;
          add_into(acc, &s.scaled[(comb[pos] * q + f_.sub(next, old)) * red]);
          if (next != 1) {
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
      // Next combination in lexicographic order.
      std::size_t i = w;
      while (i > 0 && comb[i - 1] == k_ - w + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t t = i; t < w; ++t) comb[t] = comb[t - 1] + 1;
    }
    return true;
  }

  void consider(const InfoSet& s, const std::vector<std::size_t>& comb, const std::vector<Element>& val,
                const Vector& acc, std::size_t wt) {
    Vector word(n_, 0);
    for (std::size_t i = 0; i < comb.size(); ++i) word[s.info_cols[comb[i]]] = val[i];
    for (std::size_t t = 0; t < s.red_cols.size(); ++t) word[s.red_cols[t]] = acc[t];
    if (exclude_ && exclude_->contains(word)) return;
    best_ = wt;
    witness_ = std::move(word);
  }

  void visit_full(const Vector& word) {
    ++work_;
    const std::size_t wt = weight_below(word, best_);
    if (wt >= best_) return;
    if (exclude_ && exclude_->contains(word)) return;
    best_ = wt;
    witness_ = word;
  }

  // Number of nonzeros, or some value >= limit once it reaches limit.
  static std::size_t weight_below(const Vector& v, std::size_t limit) {
    std::size_t c = 0;
    for (Element x : v)
      if (x != 0 && ++c >= limit) return c;
    return c;
  }

  void add_scaled(Vector& word, const Element* row, Element s) const {
    if (s == 0) return;
    for (std::size_t j = 0; j < n_; ++j) word[j] = f_.add(word[j], f_.mul(s, row[j]));
  }
  void add_into(Vector& acc, const Element* v) const {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f_.add(acc[j], v[j]);
  }

  bool budget_exhausted() const { return opts_.work_limit != 0 && work_ >= opts_.work_limit; }

  DistanceFact finish_exhaustive(DistanceMethod m) {
    if (best_ == kNoBound) throw EmptySetError("no codeword outside the excluded subcode");
    auto f = DistanceFact::make_exact(best_, m, witness_);
    f.work = work_;
    return f;
  }

  DistanceFact partial(DistanceMethod m, std::size_t lower) {
    DistanceFact f;
    if (best_ != kNoBound && best_ <= lower) {
      f = DistanceFact::make_exact(best_, m, witness_);
    } else {
      f = DistanceFact::make_lower(lower, best_, m, witness_);
    }
    f.work = work_;
    return f;
  }

  const LinearCode& code_;
  const LinearCode* exclude_;
  DistanceOptions opts_;
  const Field& f_;
  std::size_t n_, k_;
  std::vector<InfoSet> sets_;
  std::size_t best_ = kNoBound;
  Vector witness_;
  std::uint64_t work_ = 0;
};

inline DistanceFact run_search(const LinearCode& code, const LinearCode* exclude, const DistanceOptions& opts) {
  WeightSearch s(code, exclude, opts);
  using S = DistanceOptions::Strategy;
  S strategy = opts.strategy;
  if (strategy == S::automatic)
    strategy = saturating_power(code.field().order(), code.dimension()) <= opts.enum_cap ? S::enumerate
                                                                                          : S::information_sets;
  return strategy == S::enumerate ? s.enumerate() : s.information_sets();
}

}  // namespace detail

/// Minimum nonzero weight. The zero code gets the convention value n + 1.
inline DistanceFact min_distance(const LinearCode& c, const DistanceOptions& opts = {}) {
  if (c.dimension() == 0) return DistanceFact::make_exact(c.length() + 1, DistanceMethod::convention);
  return detail::run_search(c, nullptr, opts);
}

/// Minimum weight over the codewords of `big` that are not in `sub`.
/// Requires sub to be a proper subcode of big.
inline DistanceFact min_weight_outside(const LinearCode& big, const LinearCode& sub, const DistanceOptions& opts = {}) {
  if (!big.contains(sub)) throw PreconditionError("min_weight_outside: subcode is not contained in the code");
  if (sub.dimension() == big.dimension()) throw EmptySetError("min_weight_outside: the set difference is empty");
  if (sub.dimension() == 0) return min_distance(big, opts);
  return detail::run_search(big, &sub, opts);
}

}  // namespace eaqecc
