// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "eaqecc/bounds.hpp"
#include "eaqecc/io.hpp"
#include "suites.hpp"

using namespace eaqecc;

namespace {

const std::string kData = EAQECC_TEST_DATA_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!cond) {
      pass = false;
      detail += " [x]";
    }
  }
};

Vector load_word(const std::string& name, const Field& f) {
  const std::string t = read_text_file(kData + "/" + name);
  return parse_vector(t[0] == '#' ? t.substr(t.find('\n') + 1) : t, f);
}

bool is(const EaqeccParams& p, std::size_t n, std::size_t k, std::size_t d, std::size_t c) {
  return p.n == n && p.kappa == k && p.c == c && p.delta.exact() && p.delta.value == d;
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

Verdict golden_twenty_nine() {
  Verdict v;
  const auto t0 = Clock::now();
  const LinearCode c = load_code(kData + "/code_29_14.txt");
  v.require(hermitian_gram(c).is_zero(), "G G^dagger = 0");
  v.require(hull_dimension(c) == 14, "hull 14");
  DistanceOptions quick;
  quick.strategy = DistanceOptions::Strategy::information_sets;
  quick.work_limit = 1;
  const auto shape = hermitian_construct(c, quick);
  const double t_shape = seconds_since(t0);
  v.require(shape.n == 29 && shape.kappa == 1 && shape.c == 0 && t_shape < 1.0, "[[29,1,*;0]] in " + fmt(t_shape));
  const auto t1 = Clock::now();
  DistanceOptions o;
  o.strategy = DistanceOptions::Strategy::information_sets;
  o.work_limit = 20'000'000;
  const auto p = hermitian_construct(c, o);
  const double t_dist = seconds_since(t1);
  const bool honest = p.delta.exact() ? p.delta.value == 11 : p.delta.certainty == Certainty::lower_bound;
  const bool bracket = p.delta.lower >= 10 && p.delta.lower <= 11 && (p.delta.upper == kNoBound || p.delta.upper >= 11);
  v.require(honest && bracket && t_dist < 60.0, "delta " + p.delta.describe() + " in " + fmt(t_dist) + ", cited 11");
  return v;
}

Verdict golden_extension() {
  Verdict v;
  const LinearCode c5 = load_code(kData + "/code_5_4.txt");
  v.require(hull_dimension(c5) == 0 && min_distance(c5).value == 2, "[5,4,2] hull 0");
  const auto t0 = Clock::now();
  const LinearCode c6 = append_column(c5, load_word("column_5_4.txt", c5.field()));
  DistanceOptions e;
  e.strategy = DistanceOptions::Strategy::enumerate;
  const auto d6 = min_distance(c6, e);
  const double t = seconds_since(t0);
  v.require(d6.exact() && d6.value == 3 && hull_dimension(c6) == 1 && t < 1.0, "[6,4,3] hull 1 in " + fmt(t));
  const auto p = hermitian_construct(c6);
  v.require(is(p, 6, 1, 5, 3) && p.purity.is_pure(), p.str() + " " + p.purity.token());
  const auto r = check_all(p);
  for (const char* id : {"S3", "P", "GH"}) {
    const BoundEntry* b = r.find(id);
    v.require(b && b->applicable && b->slack == 0, std::string(id) + " slack " + (b ? std::to_string(b->slack) : "?"));
  }
  return v;
}

Verdict golden_less_entanglement() {
  Verdict v;
  const LinearCode x = load_code(kData + "/code_16_5.txt");
  const Field& f = x.field();
  const auto t0 = Clock::now();
  DistanceOptions e;
  e.strategy = DistanceOptions::Strategy::enumerate;
  const auto d = min_distance(x, e);
  const double t = seconds_since(t0);
  v.require(d.exact() && d.value == 8 && t < 1.0, "[16,5,8] in " + fmt(t));
  const LinearCode h = hull_code(x);
  v.require(h.dimension() == 3 && min_distance(h, e).value == 12, "hull [16,3,12]");
  const LinearCode y = hermitian_dual(x);
  v.require(y.dimension() == 11, "dual dimension 11");

  const auto ext = extend_row_column(x, load_word("codeword_16_w15.txt", f));
  v.require(ext.code.length() == 17 && ext.code.dimension() == 6 && min_distance(ext.code).value == 8, "[17,6,8]");
  const auto q = hermitian_construct(y);
  const auto r15 = less_entanglement_with(y, q, load_word("codeword_16_w15.txt", f));
  v.require(is(q, 16, 2, 8, 8) && is(r15.params, 17, 2, 8, 7), q.str() + " -> " + r15.params.str());
  const auto r14 = less_entanglement_with(y, q, load_word("codeword_16_w14.txt", f));
  v.require(is(r14.params, 17, 2, 7, 7), "weight 14 -> " + r14.params.str());

  const auto t1 = Clock::now();
  DistanceOptions is_opts;
  is_opts.strategy = DistanceOptions::Strategy::information_sets;
  const auto dy = min_distance(y, is_opts);
  const double t_is = seconds_since(t1);
  v.require(dy.lower >= 4 && dy.value == 5 && weight(dy.witness) == 5 && y.contains(dy.witness) && t_is < 120.0,
            "dual distance " + dy.describe() + ", witness weight " + std::to_string(weight(dy.witness)) + " in " +
                fmt(t_is));
  return v;
}

Verdict tables() {
  Verdict v;
  std::size_t checked = 0, violations = 0;
  const auto t0 = Clock::now();
  std::vector<RecordFile> files;
  for (const char* name : {"table_qubit.txt", "table_qutrit.txt"}) {
    files.push_back(load_record_file(kData + "/" + name));
    checked += files.back().records.size();
    violations += table_violations(files.back().records).size();
  }
  const double t_check = seconds_since(t0);
  v.require(violations == 0 && t_check < 10.0,
            std::to_string(checked) + " records, " + std::to_string(violations) + " violations in " + fmt(t_check));
  const auto t1 = Clock::now();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const TableStore t = TableStore::ingest(files[i].records);
    ExpandOptions o;
    o.max_n = 0;
    for (const auto& r : files[i].records) o.max_n = std::max(o.max_n, r.n);
    const TableStore closed = t.expand(o);
    const bool same = closed.compress(o) == t;
    v.require(same, "compress(expand) identity on table " + std::to_string(i + 1) + " (" + std::to_string(t.size()) +
                        " -> " + std::to_string(closed.size()) + " keys)");
  }
  const double t_closure = seconds_since(t1);
  v.require(t_closure < 300.0, "closure in " + fmt(t_closure));
  return v;
}

Verdict properties() {
  Verdict v;
  constexpr std::size_t cases = 200;
  const std::vector<std::pair<const char*, std::function<suites::Outcome()>>> all = {
      {"hull-intersection", [] { return suites::hull_vs_intersection(101, cases); }},
      {"hull-permutation", [] { return suites::hull_permutation_invariance(102, cases); }},
      {"hull-reduce", [] { return suites::hull_reduce_targets(103, cases); }},
      {"extend-column", [] { return suites::extend_column_bounds(104, cases); }},
      {"extend-row-column", [] { return suites::extend_row_column_distance(105, cases); }},
      {"min-ent/puncture", [] { return suites::min_entanglement_vs_puncture(106, cases); }},
      {"css-formulas", [] { return suites::css_formulas(107, cases); }},
  };
  for (const auto& [name, suite] : all) {
    const auto o = suite();
    v.require(o.ok(cases), std::string(name) + " " + std::to_string(o.cases - o.failures) + "/" +
                               std::to_string(o.cases) + (o.failures ? " first: " + o.first_failure : ""));
  }
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto o = suites::information_sets_vs_enumeration(201, 500);
  v.require(o.failures == 0 && o.cases == 500, std::to_string(o.cases) + " random codes with q^k <= 1e5, " +
                                                   std::to_string(o.failures) + " mismatches" +
                                                   (o.failures ? " first: " + o.first_failure : ""));
  return v;
}

std::string machine_transcript() {
  const std::string c5 = kData + "/code_5_4.txt", c16 = kData + "/code_16_5.txt";
  const std::vector<std::vector<std::string>> commands = {
      {"construct", c16},
      {"hull", "--distance", c16},
      {"dual", c5},
      {"distance", "--strategy", "information-sets", c16},
      {"propagate", "--dual", "same-ent", "--samples", "4", c5},
      {"propagate", "--dual", "less-ent", "--sampled", c5},
      {"propagate", "extend-column", c5},
      {"min-ent", "--randomized", c5},
      {"puncture-space", c5},
      {"bounds", "3", "6", "1", "5", "3", "--route", "hermitian"},
      {"table", "compress", "tableII"},
      {"table", "query", "q=3", "n=6", "kappa=1", "c=3"},
  };
  std::string all;
  for (const auto& cmd : commands) {
    std::vector<std::string> args{"--format", "machine", "--seed", "7", "--budget", "50", "--data", kData};
    args.insert(args.end(), cmd.begin(), cmd.end());
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    all += "$ " + cmd.front() + " -> " + std::to_string(code) + "\n" + out.str() + err.str();
  }
  for (std::uint64_t seed : {301u, 302u}) {
    const auto o = suites::extend_column_bounds(seed, 25);
    all += "suite " + std::to_string(o.cases) + " " + std::to_string(o.failures) + "\n";
  }
  return all;
}

Verdict determinism() {
  Verdict v;
  const std::string a = machine_transcript(), b = machine_transcript();
  v.require(a == b && a.find("-> 2") == std::string::npos,
            "12 machine-format commands and 2 seeded suites, " + std::to_string(a.size()) + " bytes identical");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"AC1", golden_twenty_nine},  {"AC2", golden_extension}, {"AC3", golden_less_entanglement},
      {"AC4", tables},              {"AC5", properties},       {"AC6", oracle_equivalence},
      {"AC7", determinism},
  };
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failed;
    std::cout << id << " " << (v.pass ? "PASS" : "FAIL") << " (" << fmt(seconds_since(t0)) << ") " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
