// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file propagate.hpp
 * @brief Hull manipulation of classical codes and the propagation rules
 * built on it.
 *
 * Classical side:
 *   hull_reduce          equivalent code with a smaller Hermitian hull (q > 2)
 *   extend_column        [n,k] -> [n+1,k], hull + 1, d <= d' <= d + 1
 *   extend_row_column    [n,k] -> [n+1,k+1], hull + 1, d' = min(d, d0 + 1)
 *   min_entanglement_search, puncture_space
 *
 * Quantum side, all starting from the ingredient Y of a pure code obtained
 * by the Hermitian route (X = Y^perpH is the code whose weights give delta):
 *   more_entanglement    [[n,k,d;c]] -> [[n,k+i,d;c+i]]
 *   same_entanglement    [[n,k,d;c]] -> [[n+1,k-1,d';c]],  d <= d' <= d + 1
 *   less_entanglement    [[n,k,d;c]] -> [[n+1,k,d';c-1]],  d' <= d
 *   apply_simple_rule    the eight parameter-only rules
 */

#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eaqecc/bounds.hpp"
#include "eaqecc/construct.hpp"
#include "eaqecc/random.hpp"

namespace eaqecc {

/// One derivation step with enough data to replay it.
struct PropagationStep {
  std::string rule;
  EaqeccParams input;
  EaqeccParams output;
  std::optional<Matrix> input_code;   ///< ingredient before the step
  std::optional<Matrix> output_code;  ///< ingredient after the step
  std::vector<std::pair<std::string, std::string>> args;

  const std::string* arg(const std::string& key) const {
    for (const auto& [k, v] : args)
      if (k == key) return &v;
    return nullptr;
  }
};

/// Result of a quantum-level propagation.
struct Propagated {
  LinearCode ingredient;  ///< classical code for the Hermitian route of the output
  EaqeccParams params;
  PropagationStep step;
};

namespace detail {

inline std::string join(std::span<const Element> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

inline void require_hermitian_field(const LinearCode& c, const char* what) {
  if (!c.field().is_square_order()) throw InvalidFieldError(std::string(what) + " needs a code over GF(q^2)");
}

// Extension precondition: 0 <= l < min(k, n - k).
inline void require_extendable(const LinearCode& c, std::size_t hull_dim, const char* what) {
  const std::size_t k = c.dimension(), n = c.length();
  if (!(hull_dim < k && hull_dim < n - k))
    throw PreconditionError(std::string(what) + ": needs hull dimension " + std::to_string(hull_dim) +
                            " < min(k, n - k) = " + std::to_string(std::min(k, n - k)));
}

inline bool enumeration_feasible(const Field& f, std::size_t dim, const DistanceOptions& opts) {
  return saturating_power(f.order(), dim) <= opts.enum_cap;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical constructions

struct HullReduction {
  LinearCode code;
  Vector scaling;  ///< column multipliers: code = C * Diag(scaling)
};

/// Equivalent code with hull dimension exactly `target`.
///
/// G is rewritten as [H; B] with H the hull basis in RREF and B vanishing on
/// the hull pivot columns; l - target of those pivot columns are then scaled
/// by a with a^(q+1) not in {0, 1}.
inline HullReduction hull_reduce(const LinearCode& c, std::size_t target) {
  detail::require_hermitian_field(c, "hull_reduce");
  const Field& f = c.field();
  if (f.base_order() == 2) throw InvalidFieldError("hull_reduce needs q > 2");
  const Hull hull = hull_hermitian(c);
  const std::size_t l = hull.dimension;
  if (target > l)
    throw PreconditionError("hull_reduce: target " + std::to_string(target) + " exceeds hull dimension " +
                            std::to_string(l));
  const std::size_t n = c.length(), k = c.dimension();
  Vector scaling(n, 1);
  if (target == l) return {c, scaling};

  const auto h = rref(hull.basis);
  Matrix rest = c.generator();
  for (std::size_t r = 0; r < rest.rows(); ++r)
    for (std::size_t i = 0; i < l; ++i) {
      const Element v = rest(r, h.pivots[i]);
      if (v == 0) continue;
      const Element nv = f.neg(v);
      for (std::size_t j = 0; j < n; ++j) rest(r, j) = f.add(rest(r, j), f.mul(nv, h.reduced(i, j)));
    }
  const Matrix b = row_basis(rest);
  if (b.rows() != k - l) throw std::logic_error("hull_reduce: complement has wrong dimension");

  Element a = 0;
  for (unsigned x = 1; x < f.order(); ++x)
    if (f.norm(static_cast<Element>(x)) != 1) {
      a = static_cast<Element>(x);
      break;
    }
  for (std::size_t j = 0; j < l - target; ++j) scaling[h.pivots[j]] = a;

  std::vector<std::size_t> hull_rows(l);
  for (std::size_t i = 0; i < l; ++i) hull_rows[i] = i;
  Matrix g = h.reduced.select_rows(hull_rows).vstack(b);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) g(r, j) = f.mul(g(r, j), scaling[j]);
  return {LinearCode(std::move(g), c.name()), std::move(scaling)};
}

/// Appends `column` (length k) to the generator matrix.
inline LinearCode append_column(const LinearCode& c, std::span<const Element> column) {
  if (column.size() != c.dimension()) throw PreconditionError("appended column has wrong length");
  Matrix col(c.field(), column.size(), 1, Vector(column.begin(), column.end()));
  return LinearCode(c.generator().hstack(col), c.name());
}

struct ColumnExtension {
  LinearCode code;
  Vector column;  ///< appended column, in the basis of the input generator
  std::size_t position = 0;
  Element alpha = 0;
};

/// Extension with the column D^-1 (alpha e_position)^T, where D G G^dagger D^dagger
/// is Diag(1..1, 0..0) with s ones, position < s and alpha^(q+1) = -1.
inline ColumnExtension extend_column_with(const LinearCode& c, const Matrix& d, std::size_t position, Element alpha) {
  detail::require_hermitian_field(c, "extend_column");
  const Field& f = c.field();
  detail::require_extendable(c, hull_dimension(c), "extend_column");
  if (f.norm(alpha) != f.neg(1)) throw PreconditionError("extend_column: alpha^(q+1) must be -1");
  const Matrix diag = d * hermitian_gram(c) * d.hermitian_transpose();
  if (position >= diag.rows() || diag(position, position) != 1)
    throw PreconditionError("extend_column: position is not a unit diagonal entry of the congruence");
  const Matrix dinv = inverse(d);
  Vector column(c.dimension());
  for (std::size_t i = 0; i < column.size(); ++i) column[i] = f.mul(dinv(i, position), alpha);
  return {append_column(c, column), column, position, alpha};
}

/// Deterministic extension: canonical congruence, first position, smallest alpha.
inline ColumnExtension extend_column(const LinearCode& c) {
  detail::require_hermitian_field(c, "extend_column");
  detail::require_extendable(c, hull_dimension(c), "extend_column");
  const auto cong = hermitian_congruence_diagonalize(hermitian_gram(c));
  const Field& f = c.field();
  return extend_column_with(c, cong.transform, 0, f.solve_norm(f.neg(1)));
}

struct ExtensionSearchOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 8;  ///< randomized congruence matrices tried after the canonical one
  DistanceOptions distance;
};

struct ColumnSearchResult {
  ColumnExtension extension;
  DistanceFact distance;
  std::size_t tried = 0;
};

/// Tries congruence matrices (canonical first, then seeded samples), positions
/// ascending and alpha ascending; keeps the first extension of largest distance.
inline ColumnSearchResult extend_column_search(const LinearCode& c, const ExtensionSearchOptions& opts = {}) {
  detail::require_hermitian_field(c, "extend_column_search");
  detail::require_extendable(c, hull_dimension(c), "extend_column_search");
  const Field& f = c.field();
  const Matrix gram = hermitian_gram(c);
  const DistanceFact base = min_distance(c, opts.distance);
  std::vector<Element> alphas;
  for (unsigned a = 1; a < f.order(); ++a)
    if (f.norm(static_cast<Element>(a)) == f.neg(1)) alphas.push_back(static_cast<Element>(a));

  std::vector<CongruenceResult> transforms{hermitian_congruence_diagonalize(gram)};
  Rng rng(opts.seed);
  for (std::size_t i = 0; i < opts.samples; ++i) transforms.push_back(hermitian_congruence_diagonalize_randomized(gram, rng));

  std::optional<ColumnSearchResult> best;
  std::size_t tried = 0;
  for (const auto& t : transforms)
    for (std::size_t pos = 0; pos < t.rank; ++pos)
      for (Element a : alphas) {
        auto ext = extend_column_with(c, t.transform, pos, a);
        auto d = min_distance(ext.code, opts.distance);
        ++tried;
        if (!best || d.value > best->distance.value) best = ColumnSearchResult{std::move(ext), std::move(d), 0};
        if (best->distance.exact() && base.exact() && best->distance.value == base.value + 1) {
          best->tried = tried;
          return *best;
        }
      }
  best->tried = tried;
  return *best;
}

struct RowColumnExtension {
  LinearCode code;
  Vector codeword;
  Element beta = 0;
};

/// [[G, 0], [c, beta]] with beta^(q+1) = -c c^dagger.
inline RowColumnExtension extend_row_column(const LinearCode& x, std::span<const Element> word) {
  detail::require_hermitian_field(x, "extend_row_column");
  const Field& f = x.field();
  detail::require_extendable(x, hull_dimension(x), "extend_row_column");
  if (word.size() != x.length()) throw PreconditionError("extend_row_column: codeword has wrong length");
  const Vector w(word.begin(), word.end());
  if (!hermitian_dual(x).contains(w)) throw PreconditionError("extend_row_column: codeword not in the Hermitian dual");
  if (x.contains(w)) throw PreconditionError("extend_row_column: codeword lies in the hull");
  Element self = 0;
  for (Element v : w) self = f.add(self, f.norm(v));
  if (self == 0) throw PreconditionError("extend_row_column: codeword has zero Hermitian self-product");
  const Element beta = f.solve_norm(f.neg(self));
  const std::size_t n = x.length(), k = x.dimension();
  Matrix g(f, k + 1, n + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = x.generator()(i, j);
  for (std::size_t j = 0; j < n; ++j) g(k, j) = w[j];
  g(k, n) = beta;
  return {LinearCode(std::move(g), x.name()), w, beta};
}

// ---------------------------------------------------------------------------
// Minimum entanglement and the punctured code

struct MinEntanglement {
  std::size_t c_min = 0;
  Vector b;        ///< diagonal over GF(q), first entry 1
  Vector scaling;  ///< a with a^(q+1) = b, so C * Diag(a) attains c_min
  Certainty certainty = Certainty::exact;
  std::uint64_t tried = 0;
};

struct MinEntanglementOptions {
  enum class Mode { exhaustive, randomized };
  Mode mode = Mode::exhaustive;
  std::uint64_t cap = 100'000'000;  ///< exhaustive limit on (q-1)^n
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000;  ///< randomized trials
};

inline std::size_t diagonal_gram_rank(const LinearCode& c, std::span<const Element> b) {
  const Field& f = c.field();
  const Matrix& g = c.generator();
  Matrix scaled = g;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) scaled(i, j) = f.mul(g(i, j), b[j]);
  return rank(scaled * g.hermitian_transpose());
}

/// min over b in (GF(q)*)^n of rank(G Diag(b) G^dagger). b is normalized to b_1 = 1.
inline MinEntanglement min_entanglement_search(const LinearCode& c, const MinEntanglementOptions& opts = {}) {
  detail::require_hermitian_field(c, "min_entanglement_search");
  const Field& f = c.field();
  const std::size_t n = c.length(), k = c.dimension();
  std::vector<Element> units;
  for (Element x : f.base_subfield())
    if (x != 0) units.push_back(x);
  const std::size_t floor_rank = 2 * k > n ? 2 * k - n : 0;

  MinEntanglement best;
  Vector b(n, 1);
  best.b = b;
  best.c_min = diagonal_gram_rank(c, b);
  best.tried = 1;
  auto consider = [&](const Vector& cand) {
    ++best.tried;
    const std::size_t r = diagonal_gram_rank(c, cand);
    if (r < best.c_min) {
      best.c_min = r;
      best.b = cand;
    }
  };

  if (opts.mode == MinEntanglementOptions::Mode::exhaustive) {
    if (saturating_power(units.size(), n) > opts.cap)
      throw BudgetError("min_entanglement_search: (q-1)^n exceeds the exhaustive cap");
    std::vector<std::size_t> idx(n, 0);
    while (best.c_min > floor_rank && n > 1) {
      std::size_t pos = n;
      while (pos > 1) {
        --pos;
        if (++idx[pos] < units.size()) break;
        idx[pos] = 0;
        if (pos == 1) pos = 0;
      }
      if (pos == 0) break;
      for (std::size_t j = 0; j < n; ++j) b[j] = units[idx[j]];
      consider(b);
    }
    best.certainty = Certainty::exact;
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t t = 1; t < opts.budget && best.c_min > floor_rank; ++t) {
      b[0] = 1;
      for (std::size_t j = 1; j < n; ++j) b[j] = units[rng.below(units.size())];
      consider(b);
    }
    best.certainty = best.c_min == floor_rank ? Certainty::exact : Certainty::upper_bound;
  }
  best.scaling.resize(n);
  for (std::size_t j = 0; j < n; ++j) best.scaling[j] = f.solve_norm(best.b[j]);
  return best;
}

/// Basis (rows, entries in GF(q) inside GF(q^2)) of all b in GF(q)^n with
/// sum_i b_i x_i y_i^q = 0 for every pair of codewords x, y.
inline Matrix puncture_space(const LinearCode& c) {
  detail::require_hermitian_field(c, "puncture_space");
  const Field& f = c.field();
  const std::size_t n = c.length(), k = c.dimension();
  Element theta = 0;
  for (unsigned x = 0; x < f.order(); ++x)
    if (!f.in_base_subfield(static_cast<Element>(x))) {
      theta = static_cast<Element>(x);
      break;
    }
  const Element denom_inv = f.inv(f.sub(theta, f.conj(theta)));
  const Matrix& g = c.generator();
  Matrix cons(f, 2 * k * k, n);
  std::size_t row = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s, row += 2)
      for (std::size_t j = 0; j < n; ++j) {
        const Element z = f.mul(g(r, j), f.conj(g(s, j)));
        const Element z1 = f.mul(f.sub(z, f.conj(z)), denom_inv);
        const Element z0 = f.sub(z, f.mul(z1, theta));
        cons(row, j) = z0;
        cons(row + 1, j) = z1;
      }
  return kernel(cons);
}

struct PunctureSearchOptions {
  std::uint64_t cap = 1'000'000;  ///< enumerate the whole space when q^dim is at most this
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000;
};

/// A vector of the space with every coordinate nonzero, if one is found.
inline std::optional<Vector> find_full_weight(const Matrix& space, const PunctureSearchOptions& opts = {}) {
  const Field& f = space.field();
  const std::vector<Element>& sub = f.base_subfield();
  const std::size_t dim = space.rows(), n = space.cols();
  if (dim == 0) return std::nullopt;
  auto full = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](Element x) { return x != 0; }); };
  if (saturating_power(sub.size(), dim) <= opts.cap) {
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
      std::size_t pos = dim;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < sub.size()) break;
        idx[pos] = 0;
        if (pos == 0) return std::nullopt;
      }
      Vector coeff(dim);
      for (std::size_t i = 0; i < dim; ++i) coeff[i] = sub[idx[i]];
      Vector v = space.left_multiply(coeff);
      if (full(v)) return v;
    }
  }
  Rng rng(opts.seed);
  Vector coeff(dim);
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    for (auto& x : coeff) x = sub[rng.below(sub.size())];
    Vector v = space.left_multiply(coeff);
    if (full(v)) return v;
  }
  (void)n;
  return std::nullopt;
}

/// Column multipliers a with C * Diag(a) Hermitian self-orthogonal, if found.
inline std::optional<Vector> self_orthogonal_scaling(const LinearCode& c, const PunctureSearchOptions& opts = {}) {
  auto b = find_full_weight(puncture_space(c), opts);
  if (!b) return std::nullopt;
  Vector a(b->size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = c.field().solve_norm((*b)[j]);
  return a;
}

// ---------------------------------------------------------------------------
// Quantum propagation rules

namespace detail {

inline void require_pure_hermitian(const EaqeccParams& q, const char* what) {
  if (q.route != Route::hermitian) throw PreconditionError(std::string(what) + ": input must come from the Hermitian route");
  if (!q.purity.is_pure()) throw PreconditionError(std::string(what) + ": input code " + q.str() + " is not pure");
}

inline PropagationStep make_step(std::string rule, const EaqeccParams& in, const EaqeccParams& out,
                                 const LinearCode* before, const LinearCode* after) {
  PropagationStep s;
  s.rule = std::move(rule);
  s.input = in;
  s.output = out;
  if (before) s.input_code = before->generator();
  if (after) s.output_code = after->generator();
  return s;
}

inline EaqeccParams derived_from(const EaqeccParams& in, const std::string& rule) {
  EaqeccParams p = in;
  p.provenance.push_back(rule + " from " + in.str());
  p.source = rule;
  return p;
}

// Hermitian construction when the relevant distance is enumerable, else
// parameters inherited from the theorem with the supplied distance fact.
inline EaqeccParams construct_or_inherit(const LinearCode& ingredient, const EaqeccParams& in, const std::string& rule,
                                         const DistanceOptions& opts, const DistanceFact& inherited,
                                         Purity inherited_purity) {
  const std::size_t dual_dim = ingredient.length() - ingredient.dimension();
  EaqeccParams p;
  if (enumeration_feasible(ingredient.field(), dual_dim, opts)) {
    p = hermitian_construct(ingredient, opts);
  } else {
    const Hull h = hull_hermitian(ingredient);
    p.q = ingredient.field().base_order();
    p.n = ingredient.length();
    p.c = ingredient.dimension() - h.dimension;
    p.kappa = p.n + p.c - 2 * ingredient.dimension();
    p.delta = inherited;
    p.purity = inherited_purity;
    p.route = Route::hermitian;
    p.validate();
    require_bound_consistent(p);
  }
  p.source = rule;
  p.provenance = in.provenance;
  p.provenance.push_back(rule + " from " + in.str());
  return p;
}

}  // namespace detail

/// [[n,k,d;c]] -> [[n,k+i,d;c+i]] by hull_reduce(Y, l - i).
///
/// The scaled witness of the input distance stays outside the reduced hull,
/// and the dual distance is unchanged by scaling, so d is exact.
inline Propagated more_entanglement(const LinearCode& y, const EaqeccParams& q, std::size_t i) {
  detail::require_pure_hermitian(q, "more_entanglement");
  const std::size_t l = hull_dimension(y);
  if (i < 1 || i > l)
    throw PreconditionError("more_entanglement: i = " + std::to_string(i) + " outside [1, " + std::to_string(l) + "]");
  auto red = hull_reduce(y, l - i);
  const Field& f = y.field();
  EaqeccParams p = detail::derived_from(q, "more_ent");
  p.kappa = q.kappa + i;
  p.c = q.c + i;
  p.route = Route::hermitian;
  p.purity = Purity::pure();
  p.delta = q.delta;
  if (!q.delta.witness.empty()) {
    for (std::size_t j = 0; j < p.delta.witness.size(); ++j)
      p.delta.witness[j] = f.mul(p.delta.witness[j], f.inv(f.conj(red.scaling[j])));
    p.delta.method = DistanceMethod::witness;
  } else {
    p.delta.method = DistanceMethod::theorem;
  }
  p.validate();
  require_bound_consistent(p);
  auto step = detail::make_step("more_ent", q, p, &y, &red.code);
  step.args.emplace_back("i", std::to_string(i));
  step.args.emplace_back("scaling", detail::join(red.scaling));
  return {std::move(red.code), std::move(p), std::move(step)};
}

inline Propagated more_entanglement(const LinearCode& y, std::size_t i, const DistanceOptions& opts = {}) {
  return more_entanglement(y, hermitian_construct(y, opts), i);
}

/// [[n,k,d;c]] -> [[n+1,k-1,d';c]] with X' = X extended by `column`.
inline Propagated same_entanglement_with(const LinearCode& y, const EaqeccParams& q, std::span<const Element> column,
                                         const DistanceOptions& opts = {}) {
  detail::require_pure_hermitian(q, "same_entanglement");
  if (q.kappa == 0 || q.c == 0) throw RuleNotApplicableError("same_entanglement: needs kappa > 0 and c > 0");
  const LinearCode x = hermitian_dual(y);
  const std::size_t lx = hull_dimension(x);
  try {
    detail::require_extendable(x, lx, "same_entanglement");
  } catch (const PreconditionError& e) {
    throw RuleNotApplicableError(e.what());
  }
  const LinearCode x2 = append_column(x, column);
  if (hull_dimension(x2) != lx + 1) throw PreconditionError("same_entanglement: column does not raise the hull by one");
  const LinearCode y2 = hermitian_dual(x2);
  DistanceFact inherited = DistanceFact::make_lower(q.delta.value, q.delta.value + 1, DistanceMethod::theorem);
  EaqeccParams p = detail::construct_or_inherit(y2, q, "same_ent", opts, inherited, Purity::unknown());
  auto step = detail::make_step("same_ent", q, p, &y, &y2);
  step.args.emplace_back("column", detail::join(column));
  return {y2, std::move(p), std::move(step)};
}

inline Propagated same_entanglement(const LinearCode& y, const EaqeccParams& q, const ExtensionSearchOptions& opts = {}) {
  detail::require_pure_hermitian(q, "same_entanglement");
  if (q.kappa == 0 || q.c == 0) throw RuleNotApplicableError("same_entanglement: needs kappa > 0 and c > 0");
  const LinearCode x = hermitian_dual(y);
  try {
    detail::require_extendable(x, hull_dimension(x), "same_entanglement");
  } catch (const PreconditionError& e) {
    throw RuleNotApplicableError(e.what());
  }
  const auto found = extend_column_search(x, opts);
  return same_entanglement_with(y, q, found.extension.column, opts.distance);
}

inline Propagated same_entanglement(const LinearCode& y, const ExtensionSearchOptions& opts = {}) {
  return same_entanglement(y, hermitian_construct(y, opts.distance), opts);
}

/// [[n,k,d;c]] -> [[n+1,k,d';c-1]] with X' = [[X, 0], [word, beta]], word in Y \ hull.
inline Propagated less_entanglement_with(const LinearCode& y, const EaqeccParams& q, std::span<const Element> word,
                                         const DistanceOptions& opts = {}) {
  detail::require_pure_hermitian(q, "less_entanglement");
  if (q.c == 0) throw RuleNotApplicableError("less_entanglement: needs c >= 1");
  const LinearCode x = hermitian_dual(y);
  try {
    detail::require_extendable(x, hull_dimension(x), "less_entanglement");
  } catch (const PreconditionError& e) {
    throw RuleNotApplicableError(e.what());
  }
  const auto ext = extend_row_column(x, word);
  const LinearCode y2 = hermitian_dual(ext.code);
  DistanceFact inherited = DistanceFact::make_upper(q.delta.value, DistanceMethod::theorem);
  EaqeccParams p = detail::construct_or_inherit(y2, q, "less_ent", opts, inherited, Purity::unknown());
  auto step = detail::make_step("less_ent", q, p, &y, &y2);
  step.args.emplace_back("codeword", detail::join(word));
  step.args.emplace_back("beta", std::to_string(ext.beta));
  return {y2, std::move(p), std::move(step)};
}

struct LessEntanglementOptions {
  enum class Strategy { exhaustive, sampled };
  Strategy strategy = Strategy::exhaustive;
  std::uint64_t cap = 100'000;  ///< exhaustive limit on projective codewords of Y
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000;  ///< sampled codewords
  DistanceOptions distance;
};

/// Tries qualifying codewords of Y (projectively, in odometer order, or
/// seeded samples) and keeps the first one giving the largest distance.
inline Propagated less_entanglement(const LinearCode& y, const EaqeccParams& q, const LessEntanglementOptions& opts = {}) {
  detail::require_pure_hermitian(q, "less_entanglement");
  if (q.c == 0) throw RuleNotApplicableError("less_entanglement: needs c >= 1");
  const Field& f = y.field();
  const LinearCode x = hermitian_dual(y);
  const std::size_t ky = y.dimension();
  auto qualifies = [&](const Vector& w) {
    if (x.contains(w)) return false;
    Element self = 0;
    for (Element v : w) self = f.add(self, f.norm(v));
    return self != 0;
  };
  std::optional<Propagated> best;
  auto consider = [&](const Vector& w) {
    if (!qualifies(w)) return false;
    auto r = less_entanglement_with(y, q, w, opts.distance);
    if (!best || r.params.delta.value > best->params.delta.value) best = std::move(r);
    return best->params.delta.exact() && best->params.delta.value >= q.delta.value;
  };
  if (opts.strategy == LessEntanglementOptions::Strategy::exhaustive) {
    if (saturating_power(f.order(), ky) > opts.cap * (f.order() - 1) + 1)
      throw BudgetError("less_entanglement: too many codewords for the exhaustive strategy");
    Vector coeff(ky, 0);
    bool done = false;
    for (std::size_t lead = 0; lead < ky && !done; ++lead) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[lead] = 1;
      for (;;) {
        if (consider(y.encode(coeff))) {
          done = true;
          break;
        }
        bool advanced = false;
        for (std::size_t pos = ky; pos > lead + 1 && !advanced;) {
          --pos;
          coeff[pos] = static_cast<Element>((coeff[pos] + 1) % f.order());
          advanced = coeff[pos] != 0;
        }
        if (!advanced) break;
      }
    }
  } else {
    Rng rng(opts.seed);
    Vector coeff(ky);
    for (std::uint64_t t = 0; t < opts.budget; ++t) {
      for (auto& v : coeff) v = rng.element(f);
      if (consider(y.encode(coeff))) break;
    }
  }
  if (!best) throw RuleNotApplicableError("less_entanglement: no qualifying codeword found");
  return std::move(*best);
}

inline Propagated less_entanglement(const LinearCode& y, const LessEntanglementOptions& opts = {}) {
  return less_entanglement(y, hermitian_construct(y, opts.distance), opts);
}

// ---------------------------------------------------------------------------
// Parameter-only rules

/// Integer view of a parameter set as seen by the parameter-only rules.
struct RuleState {
  unsigned q = 2;
  std::size_t n = 0, kappa = 0, delta = 0, c = 0;
  bool pure = false;
  friend bool operator==(const RuleState&, const RuleState&) = default;
};

/// Image of `s` under rule 1..8, or nullopt with the reason in `why` when a
/// side condition or a parameter invariant (0 <= kappa <= n, delta >= 1,
/// 0 <= c <= n - kappa) fails. Rules 1-5 forget purity; 6 and 8 need it and
/// keep it; 7 keeps whatever the input had.
inline std::optional<RuleState> simple_rule_image(const RuleState& s, int rule, std::string* why = nullptr) {
  auto no = [&](const char* reason) -> std::optional<RuleState> {
    if (why) *why = reason;
    return std::nullopt;
  };
  RuleState t = s;
  switch (rule) {
    case 1:
      t.n = s.n + 1;
      t.pure = false;
      break;
    case 2:
      if (s.kappa == 0) return no("kappa would become negative");
      t.kappa = s.kappa - 1;
      t.pure = false;
      break;
    case 3:
      t.delta = s.delta - 1;
      t.pure = false;
      break;
    case 4:
      t.c = s.c + 1;
      t.pure = false;
      break;
    case 5:
      if (!(s.delta > 1 && s.c + s.kappa < s.n)) return no("needs delta > 1 and c < n - kappa");
      t.n = s.n - 1;
      t.delta = s.delta - 1;
      t.pure = false;
      break;
    case 6:
      if (!s.pure) return no("needs a pure code");
      if (s.q <= 2) return no("needs q > 2");
      if (s.c + s.kappa + 2 > s.n) return no("needs c <= n - kappa - 2");
      t.kappa = s.kappa + 1;
      t.c = s.c + 1;
      break;
    case 7:
      if (s.c + s.kappa + 2 > s.n) return no("needs c <= n - kappa - 2");
      t.n = s.n - 1;
      t.c = s.c + 1;
      break;
    case 8:
      if (!s.pure) return no("needs a pure code");
      if (s.n == 0) return no("n would become negative");
      t.n = s.n - 1;
      t.kappa = s.kappa + 1;
      t.delta = s.delta - 1;
      break;
    default: return no("unknown rule");
  }
  if (t.n == 0) return no("length would become zero");
  if (t.delta == 0 || t.delta > s.delta + 1) return no("distance would become zero");
  if (t.kappa > t.n) return no("kappa would exceed n");
  if (t.c + t.kappa > t.n) return no("c would exceed n - kappa");
  return t;
}

/// One of the eight parameter-only rules applied to full parameters.
inline EaqeccParams apply_simple_rule(const EaqeccParams& q, int rule) {
  const RuleState s{q.q, q.n, q.kappa, q.delta.value, q.c, q.purity.is_pure()};
  std::string why;
  const auto t = simple_rule_image(s, rule, &why);
  if (!t) throw RuleNotApplicableError("rule " + std::to_string(rule) + " on " + q.str() + ": " + why);
  EaqeccParams p = detail::derived_from(q, "rule" + std::to_string(rule));
  p.route = Route::derived;
  p.route_assumed = false;
  p.n = t->n;
  p.kappa = t->kappa;
  p.c = t->c;
  p.delta.value = t->delta;
  p.delta.method = DistanceMethod::theorem;
  p.delta.witness.clear();
  if (p.delta.certainty == Certainty::upper_bound) {
    p.delta.upper = p.delta.value;
  } else {
    p.delta.lower = p.delta.value;
    if (p.delta.certainty == Certainty::exact) p.delta.upper = p.delta.value;
  }
  if (!t->pure) p.purity = Purity::unknown();
  p.validate();
  return p;
}

inline PropagationStep simple_rule_step(const EaqeccParams& q, int rule) {
  return detail::make_step("simple_" + std::to_string(rule), q, apply_simple_rule(q, rule), nullptr, nullptr);
}

/// Certificate for a classical step; the parameters are those of the
/// Hermitian route applied to the codes before and after.
inline PropagationStep classical_step(const std::string& rule, const LinearCode& before, const LinearCode& after,
                                      std::vector<std::pair<std::string, std::string>> args,
                                      const DistanceOptions& opts = {}) {
  auto s = detail::make_step(rule, hermitian_construct(before, opts), hermitian_construct(after, opts), &before, &after);
  s.args = std::move(args);
  return s;
}

}  // namespace eaqecc
