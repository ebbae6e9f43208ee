// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tables.hpp
 * @brief Best-known parameter tables: ingest, closure under the
 * parameter-only rules, compression to a dominance-free set, queries.
 *
 * A store keeps, per key (q, n, kappa, c), the best distance of any record
 * and separately the best distance of a pure record, since the rules that
 * need purity can only start from the latter.
 *
 * Record files hold one record per line:
 *
 *   q n kappa delta c purity source
 *
 * with '#' comments. A comment "# fnv1a64 <hex>" is a checksum over the
 * record lines (each followed by '\n') and is verified on load.
 */

#pragma once

#include <cstdint>
#include <deque>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "eaqecc/bounds.hpp"
#include "eaqecc/params.hpp"
#include "eaqecc/propagate.hpp"

namespace eaqecc {

// ---------------------------------------------------------------------------
// Record lines

inline Route route_from_source(const std::string& source) {
  if (source == "hermitian" || source == "constructed") return Route::hermitian;
  if (source == "css") return Route::css;
  if (source.rfind("table", 0) == 0) return Route::table;
  if (source.rfind("derived", 0) == 0 || source.rfind("rule", 0) == 0 || source.rfind("more_ent", 0) == 0 ||
      source.rfind("same_ent", 0) == 0 || source.rfind("less_ent", 0) == 0)
    return Route::derived;
  return Route::unknown;
}

inline std::string delta_token(const DistanceFact& d) {
  switch (d.certainty) {
    case Certainty::exact: return std::to_string(d.value);
    case Certainty::lower_bound: return ">=" + std::to_string(d.value);
    case Certainty::upper_bound: return "<=" + std::to_string(d.value);
  }
  return std::to_string(d.value);
}

inline std::string sanitize_token(std::string s) {
  if (s.empty()) return "-";
  for (auto& ch : s)
    if (ch == ' ' || ch == '\t' || ch == ',') ch = '_';
  return s;
}

/// "q n kappa delta c purity source"
inline std::string to_record_line(const EaqeccParams& p) {
  std::ostringstream os;
  os << p.q << ' ' << p.n << ' ' << p.kappa << ' ' << delta_token(p.delta) << ' ' << p.c << ' ' << p.purity.token()
     << ' ' << sanitize_token(p.source);
  return os.str();
}

namespace detail {

inline std::size_t parse_count(const std::string& tok, const char* what, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
    throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
  return std::stoul(tok);
}

}  // namespace detail

inline EaqeccParams parse_record_line(const std::string& text, std::size_t line = 0) {
  std::istringstream is(text);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  if (tok.size() != 7) throw ParseError("expected 7 fields 'q n kappa delta c purity source', got " + std::to_string(tok.size()), line);
  EaqeccParams p;
  p.q = static_cast<unsigned>(detail::parse_count(tok[0], "q", line));
  if (p.q < 2) throw ParseError("q must be at least 2", line);
  p.n = detail::parse_count(tok[1], "n", line);
  p.kappa = detail::parse_count(tok[2], "kappa", line);
  std::string d = tok[3];
  Certainty cert = Certainty::exact;
  if (d.rfind(">=", 0) == 0) cert = Certainty::lower_bound, d = d.substr(2);
  else if (d.rfind("<=", 0) == 0) cert = Certainty::upper_bound, d = d.substr(2);
  const std::size_t dv = detail::parse_count(d, "delta", line);
  if (cert == Certainty::exact) p.delta = DistanceFact::make_exact(dv, DistanceMethod::citation);
  else if (cert == Certainty::lower_bound) p.delta = DistanceFact::make_lower(dv, kNoBound, DistanceMethod::citation);
  else p.delta = DistanceFact::make_upper(dv, DistanceMethod::citation);
  p.c = detail::parse_count(tok[4], "c", line);
  try {
    p.purity = Purity::parse(tok[5]);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line);
  }
  p.source = tok[6];
  p.route = route_from_source(p.source);
  p.route_assumed = p.route == Route::table;
  try {
    p.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line);
  }
  return p;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct RecordFile {
  std::vector<EaqeccParams> records;
  std::vector<std::size_t> lines;  ///< source line of each record
  std::optional<std::uint64_t> declared_checksum;
  std::uint64_t actual_checksum = 0;
  bool checksum_ok() const { return !declared_checksum || *declared_checksum == actual_checksum; }
};

/// Parses record lines; does not throw on a checksum mismatch (see checksum_ok).
inline RecordFile parse_record_text(const std::string& text) {
  RecordFile f;
  std::istringstream is(text);
  std::string line, body;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream cs(line.substr(first + 1));
      std::string key, value;
      if (cs >> key >> value && key == "fnv1a64") {
        if (value.size() != 16 || value.find_first_not_of("0123456789abcdef") != std::string::npos)
          throw ParseError("bad checksum '" + value + "'", no);
        f.declared_checksum = std::stoull(value, nullptr, 16);
      }
      continue;
    }
    f.records.push_back(parse_record_line(line, no));
    f.lines.push_back(no);
    body += line.substr(first) + "\n";
  }
  f.actual_checksum = fnv1a64(body);
  return f;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Record file from disk; throws ParseError on a checksum mismatch.
inline RecordFile load_record_file(const std::string& path) {
  RecordFile f = parse_record_text(read_text_file(path));
  if (!f.checksum_ok())
    throw ParseError(path + ": checksum mismatch, expected " + hex64(*f.declared_checksum) + " got " +
                     hex64(f.actual_checksum));
  return f;
}

// ---------------------------------------------------------------------------
// Store

struct TableKey {
  unsigned q;
  std::size_t n, kappa, c;
  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

/// Query filter; unset fields match anything.
struct TableFilter {
  std::optional<unsigned> q;
  std::optional<std::size_t> n, kappa, c;
  bool matches(const TableKey& k) const {
    return (!q || *q == k.q) && (!n || *n == k.n) && (!kappa || *kappa == k.kappa) && (!c || *c == k.c);
  }
};

struct ExpandOptions {
  std::vector<int> rules{1, 2, 3, 4, 5, 6, 7, 8};
  std::size_t max_n = 64;
  /// Table policy: rule 7 only starts from pure records.
  bool rule7_needs_purity = true;
};

class TableStore {
 public:
  struct Entry {
    std::size_t delta = 0;
    std::string source;
    // Derivation parent for derived entries.
    bool derived = false;
    TableKey parent{};
    bool parent_pure = false;
    int rule = 0;
  };

  TableStore() = default;

  /// Adds a record; keeps the larger distance, then a pure record, then the
  /// smaller source tag. Upper-bound distances are ignored.
  void insert(const EaqeccParams& p) {
    if (p.delta.certainty == Certainty::upper_bound) return;
    Entry e;
    e.delta = p.delta.value;
    e.source = sanitize_token(p.source);
    const TableKey k{p.q, p.n, p.kappa, p.c};
    merge(any_, k, e);
    if (p.purity.is_pure()) merge(pure_, k, e);
  }

  static TableStore ingest(const std::vector<EaqeccParams>& records) {
    TableStore s;
    for (const auto& r : records) s.insert(r);
    return s;
  }

  bool empty() const { return any_.empty(); }
  /// Number of distinct keys.
  std::size_t size() const { return any_.size(); }

  std::optional<Entry> best(const TableKey& k) const { return lookup(any_, k); }
  std::optional<Entry> best_pure(const TableKey& k) const { return lookup(pure_, k); }

  /// Records as parameter sets, key order, pure record first when it differs.
  std::vector<EaqeccParams> records() const {
    std::vector<EaqeccParams> out;
    for (const auto& [k, e] : any_) {
      auto pit = pure_.find(k);
      if (pit != pure_.end()) out.push_back(to_params(k, pit->second, true));
      if (pit == pure_.end() || pit->second.delta < e.delta) out.push_back(to_params(k, e, false));
    }
    return out;
  }

  /// Rule chain leading to the stored entry, oldest rule first.
  std::vector<int> chain(const TableKey& k, bool pure) const {
    std::vector<int> rules;
    const auto* m = pure ? &pure_ : &any_;
    auto it = m->find(k);
    while (it != m->end() && it->second.derived && rules.size() < 100000) {
      rules.push_back(it->second.rule);
      const TableKey pk = it->second.parent;
      m = it->second.parent_pure ? &pure_ : &any_;
      it = m->find(pk);
    }
    return {rules.rbegin(), rules.rend()};
  }

  /// Closure under the chosen rules within n <= max_n.
  TableStore expand(const ExpandOptions& opts) const {
    TableStore out = *this;
    out.close(opts, nullptr);
    return out;
  }

  /// Records not derivable from the other records (and their closure).
  TableStore compress(const ExpandOptions& opts) const {
    TableStore closure = *this;
    Strict strict;
    closure.close(opts, &strict);
    TableStore out;
    for (const auto& [k, e] : any_) {
      if (e.derived) continue;
      const auto s = lookup_delta(strict.any, k);
      if (e.delta > s) out.any_[k] = seed(e);
    }
    for (const auto& [k, e] : pure_) {
      if (e.derived) continue;
      const auto s = lookup_delta(strict.pure, k);
      if (e.delta > s) {
        out.pure_[k] = seed(e);
        auto it = out.any_.find(k);
        if (it == out.any_.end() || it->second.delta < e.delta) out.any_[k] = seed(e);
      }
    }
    return out;
  }

  /// Best record per matching key; with `closure` the store is expanded first.
  std::vector<EaqeccParams> query(const TableFilter& f, const std::optional<ExpandOptions>& closure = {}) const {
    if (closure) {
      ExpandOptions o = *closure;
      if (f.n) o.max_n = std::max(o.max_n, *f.n);
      return expand(o).query(f);
    }
    std::vector<EaqeccParams> out;
    for (const auto& [k, e] : any_) {
      if (!f.matches(k)) continue;
      auto pit = pure_.find(k);
      if (pit != pure_.end() && pit->second.delta >= e.delta) out.push_back(to_params(k, pit->second, true));
      else out.push_back(to_params(k, e, false));
    }
    return out;
  }

  /// Record lines, byte-stable.
  std::string to_record_text() const {
    std::string s;
    for (const auto& p : records()) s += to_record_line(p) + "\n";
    return s;
  }

  /// CSV with header "q,n,kappa,delta,c,purity,source".
  std::string to_csv() const {
    std::string s = "q,n,kappa,delta,c,purity,source\n";
    for (const auto& p : records()) {
      s += std::to_string(p.q) + "," + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," +
           delta_token(p.delta) + "," + std::to_string(p.c) + "," + p.purity.token() + "," + p.source + "\n";
    }
    return s;
  }

  friend bool operator==(const TableStore& a, const TableStore& b) {
    return a.to_record_text() == b.to_record_text();
  }

 private:
  using Map = std::map<TableKey, Entry>;
  struct Strict {
    std::map<TableKey, std::size_t> any, pure;
  };

  static Entry seed(const Entry& e) {
    Entry s = e;
    s.derived = false;
    return s;
  }

  static void merge(Map& m, const TableKey& k, const Entry& e) {
    auto it = m.find(k);
    if (it == m.end()) {
      m.emplace(k, e);
      return;
    }
    Entry& cur = it->second;
    if (e.delta > cur.delta || (e.delta == cur.delta && e.source < cur.source)) cur = e;
  }

  static std::optional<Entry> lookup(const Map& m, const TableKey& k) {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  static std::size_t lookup_delta(const std::map<TableKey, std::size_t>& m, const TableKey& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  }

  EaqeccParams to_params(const TableKey& k, const Entry& e, bool pure) const {
    EaqeccParams p;
    p.q = k.q;
    p.n = k.n;
    p.kappa = k.kappa;
    p.c = k.c;
    p.delta = DistanceFact::make_exact(e.delta, e.derived ? DistanceMethod::theorem : DistanceMethod::citation);
    p.purity = pure ? Purity::pure() : Purity::unknown();
    if (e.derived) {
      std::string s = "derived:";
      const auto rules = chain(k, pure);
      for (std::size_t i = 0; i < rules.size(); ++i) s += (i ? "-" : "") + std::to_string(rules[i]);
      s += "@" + e.source;
      p.source = s;
      p.route = Route::derived;
    } else {
      p.source = e.source;
      p.route = route_from_source(e.source);
      p.route_assumed = p.route == Route::table;
    }
    return p;
  }

  // Monotone work-queue fixpoint. Seeds are the current entries; with
  // `strict`, also records the best value reached at each state in at least
  // one rule step.
  void close(const ExpandOptions& opts, Strict* strict) {
    std::deque<std::pair<TableKey, bool>> queue;
    for (const auto& [k, e] : any_) queue.emplace_back(k, false);
    for (const auto& [k, e] : pure_) queue.emplace_back(k, true);
    auto offer = [&](const RuleState& t, const TableKey& from, bool from_pure, int rule, const std::string& src) {
      if (t.n > opts.max_n) return;
      const TableKey k{t.q, t.n, t.kappa, t.c};
      if (strict) {
        auto& a = strict->any[k];
        a = std::max(a, t.delta);
        if (t.pure) {
          auto& b = strict->pure[k];
          b = std::max(b, t.delta);
        }
      }
      Entry e;
      e.delta = t.delta;
      e.source = src;
      e.derived = true;
      e.parent = from;
      e.parent_pure = from_pure;
      e.rule = rule;
      auto improve = [&](Map& m, bool pure_class) {
        auto it = m.find(k);
        if (it != m.end() && it->second.delta >= t.delta) return;
        m[k] = e;
        queue.emplace_back(k, pure_class);
      };
      improve(any_, false);
      if (t.pure) improve(pure_, true);
    };
    while (!queue.empty()) {
      const auto [k, pure] = queue.front();
      queue.pop_front();
      const Map& m = pure ? pure_ : any_;
      auto it = m.find(k);
      if (it == m.end()) continue;
      const Entry e = it->second;
      const RuleState s{k.q, k.n, k.kappa, e.delta, k.c, pure};
      for (int rule : opts.rules) {
        if (rule == 7 && opts.rule7_needs_purity && !pure) continue;
        if (auto t = simple_rule_image(s, rule)) offer(*t, k, pure, rule, e.source);
      }
    }
  }

  Map any_, pure_;
};

/// check_all over every record; returns the violating records with their reports.
inline std::vector<std::pair<EaqeccParams, BoundReport>> table_violations(const std::vector<EaqeccParams>& records) {
  std::vector<std::pair<EaqeccParams, BoundReport>> out;
  for (const auto& r : records) {
    auto rep = check_all(r);
    if (!rep.consistent()) out.emplace_back(r, std::move(rep));
  }
  return out;
}

}  // namespace eaqecc
