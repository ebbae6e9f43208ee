// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "eaqecc/all.hpp"

#ifndef EAQECC_DEFAULT_DATA_DIR
#define EAQECC_DEFAULT_DATA_DIR "data/golden"
#endif

namespace eaqecc::cli {

namespace fs = std::filesystem;

std::string default_data_dir() {
  if (const char* env = std::getenv("EAQECC_DATA"); env && *env) return env;
  return EAQECC_DEFAULT_DATA_DIR;
}

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000;
  std::uint64_t enum_cap = 100'000'000;
  std::string format = "text";
  std::string data;

  bool machine() const { return format == "machine"; }
  std::string data_dir() const { return data.empty() ? default_data_dir() : data; }
  DistanceOptions distance() const {
    DistanceOptions d;
    d.enum_cap = enum_cap;
    return d;
  }
};

// Line-oriented output. Machine mode: "#v1 <command>" then "key value" lines.
class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  bool machine() const { return machine_; }
  std::ostream& raw() { return out_; }

  void header(const std::string& command) {
    if (machine_) out_ << "#v1 " << command << "\n";
  }
  void kv(const std::string& key, const std::string& value) {
    if (machine_) out_ << key << ' ' << value << "\n";
    else out_ << key << ": " << value << "\n";
  }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void text(const std::string& line) {
    if (!machine_) out_ << line << "\n";
  }

 private:
  std::ostream& out_;
  bool machine_;
};

std::string fact_text(const DistanceFact& d, bool machine) {
  if (machine) {
    std::string s = d.describe() + " " + to_string(d.certainty) + " " + to_string(d.method);
    if (d.work) s += " work=" + std::to_string(d.work);
    return s;
  }
  std::string s = d.describe() + " (" + to_string(d.certainty) + ", " + to_string(d.method);
  if (d.work) s += ", " + std::to_string(d.work) + " words";
  return s + ")";
}

void print_fact(Printer& p, const std::string& key, const DistanceFact& d) {
  p.kv(key, fact_text(d, p.machine()));
  if (!d.witness.empty()) p.kv(key + "_witness", detail::join(d.witness));
}

void print_bounds(Printer& p, const BoundReport& r) {
  for (const auto& e : r.entries) {
    std::string v;
    if (!e.applicable) v = "n/a " + sanitize_token(e.reason);
    else v = std::string(e.satisfied ? (e.tight ? "tight" : "ok") : "VIOLATED") + " slack=" + std::to_string(e.slack) +
             (e.reason.empty() ? "" : " " + sanitize_token(e.reason));
    p.kv("bound " + e.id, v);
  }
  p.kv("bounds", r.consistent() ? "consistent" : "violated");
}

void print_params(Printer& p, const EaqeccParams& e) {
  p.kv("params", e.str());
  p.kv("record", to_record_line(e));
  print_fact(p, "delta", e.delta);
  p.kv("purity", e.purity.token());
  p.kv("route", std::string(to_string(e.route)) + (e.route_assumed ? " (assumed)" : ""));
  p.kv("net_rate", e.net_rate().str());
  for (const auto& s : e.provenance) p.kv("provenance", s);
}

void print_code(Printer& p, const std::string& key, const LinearCode& c) {
  p.kv(key, "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
                std::to_string(c.field().order()));
  if (p.machine()) p.raw() << "begin_matrix\n" << format_code(c) << "end_matrix\n";
  else p.raw() << format_code(c);
}

// Vector file: '#' comments, then the entries.
Vector load_vector(const std::string& path, const Field& f) {
  std::string body;
  std::istringstream is(read_text_file(path));
  for (std::string l; std::getline(is, l);) {
    const auto first = l.find_first_not_of(" \t\r");
    if (first == std::string::npos || l[first] == '#') continue;
    body += l + " ";
  }
  return parse_vector(body, f);
}

Vector vector_arg(std::string s, const Field& f) {
  std::replace(s.begin(), s.end(), ',', ' ');
  return parse_vector(s, f);
}

std::string resolve_data_file(const std::string& name, const std::string& dir) {
  static const std::map<std::string, std::string> aliases = {
      {"tableI", "table_qubit.txt"},  {"table-I", "table_qubit.txt"},  {"qubit", "table_qubit.txt"},
      {"tableII", "table_qutrit.txt"}, {"table-II", "table_qutrit.txt"}, {"qutrit", "table_qutrit.txt"},
      {"constructed", "constructed.txt"}};
  if (fs::exists(name)) return name;
  if (auto it = aliases.find(name); it != aliases.end()) return (fs::path(dir) / it->second).string();
  return (fs::path(dir) / name).string();
}

std::vector<std::string> bundled_record_files(const std::string& dir) {
  return {(fs::path(dir) / "table_qubit.txt").string(), (fs::path(dir) / "table_qutrit.txt").string(),
          (fs::path(dir) / "constructed.txt").string()};
}

std::string require_asset(const std::string& path) {
  if (!fs::exists(path)) throw Error("missing asset: " + path);
  return path;
}

std::vector<int> parse_rules(const std::string& s) {
  std::vector<int> rules;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  for (int r; is >> r;) {
    if (r < 1 || r > 8) throw PreconditionError("rule numbers are 1..8");
    rules.push_back(r);
  }
  return rules;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_construct(const Globals& g, Printer& p, const std::vector<std::string>& files, const std::string& route,
                  const std::string& record_out) {
  p.header("construct");
  EaqeccParams e;
  if (route == "hermitian") {
    if (files.size() != 1) throw PreconditionError("hermitian route takes one code file");
    e = hermitian_construct(load_code(files[0]), g.distance());
  } else {
    if (files.size() != 2) throw PreconditionError("css route takes two code files");
    e = css_construct(load_code(files[0]), load_code(files[1]), g.distance());
  }
  print_params(p, e);
  print_bounds(p, check_all(e));
  if (!record_out.empty()) write_text_file(record_out, to_record_line(e) + "\n");
  return 0;
}

int cmd_dual(Printer& p, const std::string& file, bool euclidean) {
  p.header("dual");
  const LinearCode c = load_code(file);
  print_code(p, euclidean ? "euclidean_dual" : "hermitian_dual", euclidean ? euclidean_dual(c) : hermitian_dual(c));
  return 0;
}

int cmd_hull(const Globals& g, Printer& p, const std::string& file, bool with_distance) {
  p.header("hull");
  const LinearCode c = load_code(file);
  const Hull h = hull_hermitian(c);
  p.kv("hull_dimension", h.dimension);
  p.kv("gram_rank", c.dimension() - h.dimension);
  const LinearCode hc(h.basis);
  if (with_distance && hc.dimension() > 0) print_fact(p, "hull_distance", min_distance(hc, g.distance()));
  print_code(p, "hull", hc);
  return 0;
}

int cmd_distance(const Globals& g, Printer& p, const std::string& file, const std::string& outside,
                 const std::string& strategy, std::uint64_t work_limit) {
  p.header("distance");
  DistanceOptions o = g.distance();
  if (strategy == "enumerate") o.strategy = DistanceOptions::Strategy::enumerate;
  else if (strategy == "information-sets") o.strategy = DistanceOptions::Strategy::information_sets;
  o.work_limit = work_limit;
  const LinearCode c = load_code(file);
  p.kv("code", "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
                   std::to_string(c.field().order()));
  if (outside.empty()) print_fact(p, "distance", min_distance(c, o));
  else print_fact(p, "distance_outside", min_weight_outside(c, load_code(outside), o));
  return 0;
}

void emit_step(Printer& p, const PropagationStep& s, const std::string& cert_out) {
  if (p.machine()) {
    p.raw() << format_certificate(s);
  } else {
    p.kv("rule", s.rule);
    p.kv("input", s.input.str() + " " + s.input.purity.token());
    p.kv("output", s.output.str() + " " + s.output.purity.token());
    print_fact(p, "delta", s.output.delta);
    for (const auto& [k, v] : s.args) p.kv("arg " + k, v);
  }
  if (!cert_out.empty()) write_text_file(cert_out, format_certificate(s));
}

int cmd_replay(const Globals& g, Printer& p, const std::string& cert) {
  const PropagationStep recorded = parse_certificate(read_text_file(cert));
  const PropagationStep again = replay(recorded, g.distance());
  const bool ok = replay_matches(recorded, again);
  p.header("replay");
  p.kv("rule", recorded.rule);
  p.kv("recorded", to_record_line(recorded.output));
  p.kv("replayed", to_record_line(again.output));
  p.kv("result", ok ? "match" : "mismatch");
  return ok ? 0 : 1;
}

int cmd_min_ent(const Globals& g, Printer& p, const std::string& file, bool randomized) {
  p.header("min-ent");
  const LinearCode c = load_code(file);
  MinEntanglementOptions o;
  o.mode = randomized ? MinEntanglementOptions::Mode::randomized : MinEntanglementOptions::Mode::exhaustive;
  o.seed = g.seed;
  o.budget = g.budget;
  const auto r = min_entanglement_search(c, o);
  p.kv("gram_rank", rank(hermitian_gram(c)));
  p.kv("c_min", r.c_min);
  p.kv("certainty", to_string(r.certainty));
  p.kv("diagonal", detail::join(r.b));
  p.kv("scaling", detail::join(r.scaling));
  p.kv("tried", std::to_string(r.tried));
  return 0;
}

int cmd_puncture(const Globals& g, Printer& p, const std::string& file) {
  p.header("puncture-space");
  const LinearCode c = load_code(file);
  const Matrix space = puncture_space(c);
  p.kv("dimension", space.rows());
  for (std::size_t i = 0; i < space.rows(); ++i) p.kv("basis", detail::join(space.row(i)));
  PunctureSearchOptions o;
  o.seed = g.seed;
  o.budget = g.budget;
  if (auto a = self_orthogonal_scaling(c, o)) p.kv("self_orthogonal_scaling", detail::join(*a));
  else p.kv("self_orthogonal_scaling", "none found");
  return 0;
}

int cmd_bounds(Printer& p, const std::vector<std::string>& fields, const std::string& route, bool pure) {
  p.header("bounds");
  std::string line;
  for (const auto& f : fields) line += f + " ";
  EaqeccParams e;
  if (fields.size() == 5) {
    e = parse_record_line(line + (pure ? "pure " : "unknown ") + (route.empty() ? "given" : route));
  } else if (fields.size() == 7) {
    e = parse_record_line(line);
  } else {
    throw PreconditionError("bounds takes 'q n kappa delta c' or a full record line");
  }
  if (!route.empty() && route != "table") {
    e.route = route_from_source(route);
    e.route_assumed = false;
  }
  if (pure) e.purity = Purity::pure();
  p.kv("params", e.str());
  const auto r = check_all(e);
  print_bounds(p, r);
  return r.consistent() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Table commands

struct Loaded {
  std::vector<EaqeccParams> records;
  std::vector<std::string> problems;  // checksum mismatches
};

Loaded load_records(const std::vector<std::string>& files, bool strict) {
  Loaded l;
  for (const auto& f : files) {
    RecordFile rf = parse_record_text(read_text_file(require_asset(f)));
    if (!rf.checksum_ok()) {
      const std::string msg =
          f + ": checksum mismatch, expected " + hex64(*rf.declared_checksum) + " got " + hex64(rf.actual_checksum);
      if (strict) throw ParseError(msg);
      l.problems.push_back(msg);
    }
    l.records.insert(l.records.end(), rf.records.begin(), rf.records.end());
  }
  return l;
}

void emit_store(Printer& p, const std::string& action, const TableStore& s, bool csv, const std::string& out_file) {
  const std::string body = s.to_record_text();
  std::string text = (p.machine() ? "#v1 table " + action + "\n" : std::string()) + "# records " +
                     std::to_string(s.records().size()) + "\n# fnv1a64 " + hex64(fnv1a64(body)) + "\n" + body;
  if (csv) text = (p.machine() ? "#v1 table " + action + " csv\n" : std::string()) + s.to_csv();
  if (out_file.empty()) p.raw() << text;
  else {
    write_text_file(out_file, text);
    p.header("table " + action);
    p.kv("written", out_file);
    p.kv("records", s.records().size());
  }
}

struct TableArgs {
  std::string action;
  std::vector<std::string> inputs;  // files, aliases and key=value filters
  std::vector<std::string> files;
  std::string out;
  bool csv = false;
  std::size_t max_n = 0;
  std::string rules = "1,2,3,4,5,6,7,8";
  bool rule7_any = false;
  bool no_closure = false;
};

int cmd_table(const Globals& g, Printer& p, TableArgs a) {
  TableFilter filter;
  std::vector<std::string> files;
  for (const auto& t : a.inputs) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      files.push_back(resolve_data_file(t, g.data_dir()));
      continue;
    }
    const std::string key = t.substr(0, eq);
    const std::size_t v = detail::parse_count(t.substr(eq + 1), key.c_str(), 0);
    if (key == "q") filter.q = static_cast<unsigned>(v);
    else if (key == "n") filter.n = v;
    else if (key == "kappa" || key == "k") filter.kappa = v;
    else if (key == "c") filter.c = v;
    else throw PreconditionError("unknown filter '" + key + "'");
  }
  for (const auto& f : a.files) files.push_back(resolve_data_file(f, g.data_dir()));
  if (files.empty()) files = bundled_record_files(g.data_dir());

  if (a.action == "check") {
    const Loaded l = load_records(files, false);
    p.header("table check");
    for (const auto& m : l.problems) p.kv("problem", m);
    const auto v = table_violations(l.records);
    p.kv("records", l.records.size());
    for (const auto& [rec, rep] : v) {
      std::string ids;
      for (const auto& e : rep.violations()) ids += (ids.empty() ? "" : ",") + e.id;
      p.kv("violation", rec.str() + " " + rec.source + " " + ids);
    }
    p.kv("violations", v.size());
    return v.empty() && l.problems.empty() ? 0 : 1;
  }

  const TableStore store = TableStore::ingest(load_records(files, true).records);
  ExpandOptions eo;
  eo.rules = parse_rules(a.rules);
  eo.rule7_needs_purity = !a.rule7_any;
  std::size_t top = 1;
  for (const auto& r : store.records()) top = std::max(top, r.n);
  eo.max_n = a.max_n ? a.max_n : top;

  if (a.action == "ingest") {
    emit_store(p, "ingest", store, a.csv, a.out);
  } else if (a.action == "expand") {
    emit_store(p, "expand", store.expand(eo), a.csv, a.out);
  } else if (a.action == "compress") {
    emit_store(p, "compress", store.compress(eo), a.csv, a.out);
  } else if (a.action == "query") {
    const auto res = a.no_closure ? store.query(filter) : store.query(filter, eo);
    p.header("table query");
    p.kv("matches", res.size());
    for (const auto& r : res) {
      if (p.machine()) p.kv("record", to_record_line(r));
      else p.raw() << r.str() << "  " << r.purity.token() << "  " << r.source << "\n";
    }
  } else {
    throw PreconditionError("unknown table action '" + a.action + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Bundled checks

class Checks {
 public:
  void add(std::string name, bool pass, std::string detail) {
    results_.push_back({std::move(name), pass, std::move(detail)});
  }
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string dims(const LinearCode& c) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]";
}

std::string dims(const LinearCode& c, std::size_t d) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," + std::to_string(d) + "]";
}

bool is(const EaqeccParams& e, std::size_t n, std::size_t k, std::size_t d, std::size_t c) {
  return e.n == n && e.kappa == k && e.c == c && e.delta.exact() && e.delta.value == d;
}

}  // namespace

std::vector<CheckResult> verify_bundled(const std::string& dir) {
  auto path = [&](const char* name) { return require_asset((fs::path(dir) / name).string()); };
  const std::string f29 = path("code_29_14.txt"), f5 = path("code_5_4.txt"), fcol = path("column_5_4.txt"),
                    f16 = path("code_16_5.txt"), fw15 = path("codeword_16_w15.txt"),
                    fw14 = path("codeword_16_w14.txt"), ft1 = path("table_qubit.txt"), ft2 = path("table_qutrit.txt"),
                    fcon = path("constructed.txt");
  Checks ck;

  ck.guarded("c29", [&] {
    const LinearCode c = load_code(f29);
    ck.add("c29 self-orthogonal", hermitian_gram(c).is_zero(), "G G^dagger = 0 for " + dims(c));
    const std::size_t l = hull_dimension(c);
    ck.add("c29 hull", l == 14, "hull dimension " + std::to_string(l));
    DistanceOptions o;
    o.strategy = DistanceOptions::Strategy::information_sets;
    o.work_limit = 20'000'000;
    const EaqeccParams e = hermitian_construct(c, o);
    const bool shape = e.n == 29 && e.kappa == 1 && e.c == 0;
    const bool dist = e.delta.lower >= 10 && e.delta.lower <= 11 && (e.delta.upper == kNoBound || e.delta.upper >= 11);
    ck.add("c29 construct", shape && dist, e.str() + " delta " + e.delta.describe() + ", cited value 11");
  });

  ck.guarded("c5", [&] {
    const LinearCode c5 = load_code(f5);
    const auto d5 = min_distance(c5);
    const std::size_t l5 = hull_dimension(c5);
    ck.add("c5 hull", l5 == 0 && d5.value == 2, dims(c5, d5.value) + " hull " + std::to_string(l5));
    const LinearCode c6 = append_column(c5, load_vector(fcol, c5.field()));
    const auto d6 = min_distance(c6);
    const std::size_t l6 = hull_dimension(c6);
    ck.add("c6 extension", d6.exact() && d6.value == 3 && l6 == 1, dims(c6, d6.value) + " hull " + std::to_string(l6));
    const EaqeccParams e = hermitian_construct(c6);
    ck.add("c6 construct", is(e, 6, 1, 5, 3) && e.purity.is_pure(), e.str() + " " + e.purity.token());
    const auto r = check_all(e);
    bool tight = true;
    std::string s;
    for (const char* id : {"S3", "P", "GH"}) {
      const BoundEntry* b = r.find(id);
      tight = tight && b && b->applicable && b->tight;
      s += std::string(id) + " slack " + (b && b->applicable ? std::to_string(b->slack) : "n/a") + "; ";
    }
    ck.add("c6 bounds tight", tight, s);
    const RecordFile con = parse_record_text(read_text_file(fcon));
    bool found = false;
    for (const auto& rec : con.records)
      found = found || (is(e, rec.n, rec.kappa, rec.delta.value, rec.c) && rec.purity == e.purity);
    ck.add("constructed record", found && con.checksum_ok(), "record file lists " + e.str());
  });

  ck.guarded("c16", [&] {
    const LinearCode c = load_code(f16);
    const auto d = min_distance(c);
    ck.add("c16 distance", d.exact() && d.value == 8, dims(c, d.value));
    const LinearCode h = hull_code(c);
    const auto dh = min_distance(h);
    ck.add("c16 hull", h.dimension() == 3 && dh.value == 12, "hull " + dims(h, dh.value));
    const LinearCode y = hermitian_dual(c);
    ck.add("c16 dual dimension", y.dimension() == 11, "Hermitian dual " + dims(y));
    DistanceOptions is_opts;
    is_opts.strategy = DistanceOptions::Strategy::information_sets;
    const auto dy = min_distance(y, is_opts);
    ck.add("c16 dual distance", dy.lower >= 4 && dy.exact() && dy.value == 5 && weight(dy.witness) == 5,
           "information sets: " + dy.describe() + ", witness weight " + std::to_string(weight(dy.witness)));
    const EaqeccParams q = hermitian_construct(y);
    ck.add("c16 construct", is(q, 16, 2, 8, 8) && q.purity.is_pure(), q.str() + " " + q.purity.token());

    const LinearCode c15 = extend_row_column(c, load_vector(fw15, c.field())).code;
    const auto d15 = min_distance(c15);
    const LinearCode h15 = hull_code(c15);
    const auto dh15 = min_distance(h15);
    ck.add("c17 extension", d15.value == 8 && c15.dimension() == 6 && h15.dimension() == 4 && dh15.value == 10,
           dims(c15, d15.value) + " hull " + dims(h15, dh15.value));
    const auto r15 = less_entanglement_with(y, q, load_vector(fw15, c.field()));
    ck.add("less-ent weight 15", is(r15.params, 17, 2, 8, 7), q.str() + " -> " + r15.params.str());
    const auto r14 = less_entanglement_with(y, q, load_vector(fw14, c.field()));
    ck.add("less-ent weight 14", is(r14.params, 17, 2, 7, 7), q.str() + " -> " + r14.params.str());
  });

  for (const auto& [label, file] : {std::pair{"table-I", ft1}, std::pair{"table-II", ft2}}) {
    ck.guarded(label, [&] {
      const RecordFile rf = parse_record_text(read_text_file(file));
      ck.add(std::string(label) + " checksum", rf.checksum_ok(),
             hex64(rf.actual_checksum) + " over " + std::to_string(rf.records.size()) + " records");
      std::string bad;
      std::size_t count = 0;
      for (std::size_t i = 0; i < rf.records.size(); ++i) {
        const auto rep = check_all(rf.records[i]);
        if (rep.consistent()) continue;
        ++count;
        bad += " line " + std::to_string(rf.lines[i]) + " " + rf.records[i].str();
        for (const auto& v : rep.violations()) bad += " " + v.id;
        bad += ";";
      }
      ck.add(std::string(label) + " bounds", count == 0, std::to_string(count) + " violations" + bad);
    });
  }
  return ck.take();
}

namespace {

int cmd_verify(const Globals& g, Printer& p) {
  const auto results = verify_bundled(g.data_dir());
  p.header("verify-paper");
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (p.machine()) p.raw() << (r.pass ? "PASS " : "FAIL ") << sanitize_token(r.name) << " " << r.detail << "\n";
    else p.raw() << (r.pass ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << "\n";
  }
  p.kv("summary", std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " passed");
  return failed ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-assisted quantum codes from classical codes over finite fields", "eaqecc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for all randomized searches")->capture_default_str();
  app.add_option("--budget", g.budget, "Trial budget for randomized searches")->capture_default_str();
  app.add_option("--enum-cap", g.enum_cap, "Largest codeword count enumerated exhaustively")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  app.add_option("--data", g.data, "Bundled data directory");

  std::function<int(Printer&)> action;

  // construct
  auto* construct = app.add_subcommand("construct", "EAQECC parameters of one (hermitian) or two (css) code files");
  std::vector<std::string> construct_files;
  std::string route = "hermitian", record_out;
  construct->add_option("codes", construct_files, "Code files")->required();
  construct->add_option("--route", route, "hermitian or css")->check(CLI::IsMember({"hermitian", "css"}))->capture_default_str();
  construct->add_option("--record", record_out, "Also write the record line to this file");
  construct->callback([&] { action = [&](Printer& p) { return cmd_construct(g, p, construct_files, route, record_out); }; });

  // dual
  auto* dual = app.add_subcommand("dual", "Hermitian (or Euclidean) dual of a code");
  std::string dual_file;
  bool euclidean = false;
  dual->add_option("code", dual_file)->required();
  dual->add_flag("--euclidean", euclidean, "Euclidean instead of Hermitian dual");
  dual->callback([&] { action = [&](Printer& p) { return cmd_dual(p, dual_file, euclidean); }; });

  // hull
  auto* hull = app.add_subcommand("hull", "Hermitian hull of a code");
  std::string hull_file;
  bool hull_distance = false;
  hull->add_option("code", hull_file)->required();
  hull->add_flag("--distance", hull_distance, "Also compute the hull's minimum distance");
  hull->callback([&] { action = [&](Printer& p) { return cmd_hull(g, p, hull_file, hull_distance); }; });

  // distance
  auto* distance = app.add_subcommand("distance", "Minimum distance, optionally outside a subcode");
  std::string dist_file, dist_outside, strategy = "auto";
  std::uint64_t work_limit = 0;
  distance->add_option("code", dist_file)->required();
  distance->add_option("--outside", dist_outside, "Subcode file; weights are taken over the set difference");
  distance->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "enumerate", "information-sets"}))->capture_default_str();
  distance->add_option("--work-limit", work_limit, "Stop after this many codewords (0 = none)")->capture_default_str();
  distance->callback([&] { action = [&](Printer& p) { return cmd_distance(g, p, dist_file, dist_outside, strategy, work_limit); }; });

  // propagate
  auto* propagate = app.add_subcommand("propagate", "Apply a propagation rule, or replay a certificate");
  std::string replay_file, cert_out, prop_out;
  propagate->add_option("--replay", replay_file, "Certificate to re-run and compare");
  propagate->add_option("--cert", cert_out, "Write the step certificate to this file");
  propagate->add_option("--out", prop_out, "Write the resulting classical code to this file");
  bool use_dual = false;
  propagate->add_flag("--dual", use_dual, "Use the Hermitian dual of the given code as the ingredient");
  propagate->require_subcommand(0, 1);

  std::string prop_code, column, codeword, codeword_file, record;
  std::size_t more_i = 1, target = 0, samples = 8;
  int simple_rule = 0;
  bool sampled = false;

  auto ingredient = [&] {
    LinearCode c = load_code(prop_code);
    return use_dual ? hermitian_dual(c) : c;
  };
  auto finish = [&](Printer& p, const Propagated& r) {
    emit_step(p, r.step, cert_out);
    if (!prop_out.empty()) write_text_file(prop_out, format_code(r.ingredient));
    return 0;
  };
  auto codeword_of = [&](const Field& f) {
    if (!codeword_file.empty()) return load_vector(codeword_file, f);
    if (codeword.empty()) throw PreconditionError("give --codeword or --codeword-file");
    return vector_arg(codeword, f);
  };

  auto* more = propagate->add_subcommand("more-ent", "[[n,k,d;c]] -> [[n,k+i,d;c+i]]");
  more->add_option("code", prop_code, "Ingredient code file")->required();
  more->add_option("--i", more_i, "Extra ebits")->capture_default_str();
  more->callback([&] {
    action = [&](Printer& p) { return finish(p, more_entanglement(ingredient(), more_i, g.distance())); };
  });

  auto* same = propagate->add_subcommand("same-ent", "[[n,k,d;c]] -> [[n+1,k-1,>=d;c]]");
  same->add_option("code", prop_code, "Ingredient code file")->required();
  same->add_option("--column", column, "Column appended to the dual's generator; searched when absent");
  same->add_option("--samples", samples, "Randomized congruences tried by the search")->capture_default_str();
  same->callback([&] {
    action = [&](Printer& p) {
      const LinearCode y = ingredient();
      const EaqeccParams q = hermitian_construct(y, g.distance());
      if (!column.empty()) return finish(p, same_entanglement_with(y, q, vector_arg(column, y.field()), g.distance()));
      ExtensionSearchOptions o;
      o.seed = g.seed;
      o.samples = samples;
      o.distance = g.distance();
      return finish(p, same_entanglement(y, q, o));
    };
  });

  auto* less = propagate->add_subcommand("less-ent", "[[n,k,d;c]] -> [[n+1,k,<=d;c-1]]");
  less->add_option("code", prop_code, "Ingredient code file")->required();
  less->add_option("--codeword", codeword, "Codeword of the ingredient outside the hull; searched when absent");
  less->add_option("--codeword-file", codeword_file, "Codeword as a vector file");
  less->add_flag("--sampled", sampled, "Sample --budget codewords instead of trying all");
  less->callback([&] {
    action = [&](Printer& p) {
      const LinearCode y = ingredient();
      const EaqeccParams q = hermitian_construct(y, g.distance());
      if (!codeword.empty() || !codeword_file.empty())
        return finish(p, less_entanglement_with(y, q, codeword_of(y.field()), g.distance()));
      LessEntanglementOptions o;
      o.strategy = sampled ? LessEntanglementOptions::Strategy::sampled : LessEntanglementOptions::Strategy::exhaustive;
      o.seed = g.seed;
      o.budget = g.budget;
      o.distance = g.distance();
      return finish(p, less_entanglement(y, q, o));
    };
  });

  auto* reduce = propagate->add_subcommand("hull-reduce", "Equivalent code with a smaller hull");
  reduce->add_option("code", prop_code)->required();
  reduce->add_option("--target", target, "Target hull dimension")->required();
  reduce->callback([&] {
    action = [&](Printer& p) {
      const LinearCode c = ingredient();
      const auto r = hull_reduce(c, target);
      auto s = classical_step("hull_reduce", c, r.code, {{"target", std::to_string(target)}, {"scaling", detail::join(r.scaling)}},
                              g.distance());
      emit_step(p, s, cert_out);
      if (!prop_out.empty()) write_text_file(prop_out, format_code(r.code));
      return 0;
    };
  });

  auto* extend = propagate->add_subcommand("extend-column", "[n,k] -> [n+1,k] with hull + 1");
  extend->add_option("code", prop_code)->required();
  extend->add_option("--column", column, "Column to append; the canonical extension when absent");
  extend->callback([&] {
    action = [&](Printer& p) {
      const LinearCode c = ingredient();
      const Vector col = column.empty() ? extend_column(c).column : vector_arg(column, c.field());
      const LinearCode e = append_column(c, col);
      auto s = classical_step("extend_column", c, e, {{"column", detail::join(col)}}, g.distance());
      emit_step(p, s, cert_out);
      if (!prop_out.empty()) write_text_file(prop_out, format_code(e));
      return 0;
    };
  });

  auto* rowcol = propagate->add_subcommand("extend-row-column", "[n,k] -> [n+1,k+1] with hull + 1");
  rowcol->add_option("code", prop_code)->required();
  rowcol->add_option("--codeword", codeword, "Codeword of the Hermitian dual outside the hull");
  rowcol->add_option("--codeword-file", codeword_file, "Codeword as a vector file");
  rowcol->callback([&] {
    action = [&](Printer& p) {
      const LinearCode c = ingredient();
      const Vector w = codeword_of(c.field());
      const auto e = extend_row_column(c, w);
      auto s = classical_step("extend_row_column", c, e.code, {{"codeword", detail::join(w)}}, g.distance());
      emit_step(p, s, cert_out);
      if (!prop_out.empty()) write_text_file(prop_out, format_code(e.code));
      return 0;
    };
  });

  auto* simple = propagate->add_subcommand("rule", "Parameter-only rule 1..8 on a record line");
  simple->add_option("number", simple_rule, "Rule number")->required()->check(CLI::Range(1, 8));
  simple->add_option("record", record, "Record line 'q n kappa delta c purity source'")->required();
  simple->callback([&] {
    action = [&](Printer& p) {
      emit_step(p, simple_rule_step(parse_record_line(record), simple_rule), cert_out);
      return 0;
    };
  });

  propagate->callback([&] {
    if (!replay_file.empty()) action = [&](Printer& p) { return cmd_replay(g, p, replay_file); };
    else if (!action) throw CLI::ValidationError("propagate", "needs a rule subcommand or --replay");
  });

  // min-ent
  auto* minent = app.add_subcommand("min-ent", "Smallest rank of G Diag(b) G^dagger over b in GF(q)*^n");
  std::string minent_file;
  bool randomized = false;
  minent->add_option("code", minent_file)->required();
  minent->add_flag("--randomized", randomized, "Sample --budget diagonals instead of all");
  minent->callback([&] { action = [&](Printer& p) { return cmd_min_ent(g, p, minent_file, randomized); }; });

  // puncture-space
  auto* punct = app.add_subcommand("puncture-space", "Diagonals over GF(q) making the code Hermitian self-orthogonal");
  std::string punct_file;
  punct->add_option("code", punct_file)->required();
  punct->callback([&] { action = [&](Printer& p) { return cmd_puncture(g, p, punct_file); }; });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Check Singleton- and Griesmer-type bounds");
  std::vector<std::string> bound_fields;
  std::string bound_route;
  bool bound_pure = false;
  bounds->add_option("fields", bound_fields, "q n kappa delta c, or a full record line")->required();
  bounds->add_option("--route", bound_route, "hermitian, css, table or derived");
  bounds->add_flag("--pure", bound_pure, "Treat the code as pure");
  bounds->callback([&] { action = [&](Printer& p) { return cmd_bounds(p, bound_fields, bound_route, bound_pure); }; });

  // table
  auto* table = app.add_subcommand("table", "Parameter tables: ingest, expand, compress, query, check");
  TableArgs ta;
  table->add_option("action", ta.action)->required()->check(CLI::IsMember({"ingest", "expand", "compress", "query", "check"}));
  table->add_option("inputs", ta.inputs, "Record files (or tableI / tableII) and q= n= kappa= c= filters");
  table->add_option("--file", ta.files, "Record file (repeatable)");
  table->add_option("-o,--output", ta.out, "Write the resulting records to this file");
  table->add_flag("--csv", ta.csv, "Comma-separated output");
  table->add_option("--max-n", ta.max_n, "Largest length reached by the closure (default: largest in the input)");
  table->add_option("--rules", ta.rules, "Rules used by the closure")->capture_default_str();
  table->add_flag("--rule7-any", ta.rule7_any, "Let rule 7 start from records of unknown purity");
  table->add_flag("--no-closure", ta.no_closure, "Query the stored records only");
  table->callback([&] { action = [&](Printer& p) { return cmd_table(g, p, ta); }; });

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Re-derive every bundled golden example");
  verify->callback([&] { action = [&](Printer& p) { return cmd_verify(g, p); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  Printer printer(out, g.machine());
  try {
    return action(printer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"eaqecc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace eaqecc::cli
