// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Text formats for matrices, codes and propagation certificates.
 *
 * Matrix file:
 *
 *   q=9 rows=2 cols=3
 *   1 0 3
 *   0 1 7
 *
 * Code file: the same with `kind=generator` and optionally `name=<token>`
 * in the header. Lines starting with '#' are comments. Entries are the
 * integer encodings of field elements.
 *
 * Certificate file:
 *
 *   #v1 certificate
 *   rule <id>
 *   input <record line>
 *   output <record line>
 *   arg <key> <value...>
 *   input_code            followed by a matrix file block
 *   output_code           followed by a matrix file block
 *   end
 */

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eaqecc/code.hpp"
#include "eaqecc/propagate.hpp"
#include "eaqecc/tables.hpp"

namespace eaqecc {

struct MatrixHeader {
  unsigned q = 0;
  std::size_t rows = 0, cols = 0;
  std::string kind;
  std::string name;
};

namespace detail {

inline MatrixHeader parse_matrix_header(const std::string& line, std::size_t no) {
  MatrixHeader h;
  std::istringstream is(line);
  bool have_q = false, have_r = false, have_c = false;
  for (std::string tok; is >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("header field '" + tok + "' is not key=value", no);
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "q") h.q = static_cast<unsigned>(parse_count(value, "q", no)), have_q = true;
    else if (key == "rows") h.rows = parse_count(value, "rows", no), have_r = true;
    else if (key == "cols") h.cols = parse_count(value, "cols", no), have_c = true;
    else if (key == "kind") h.kind = value;
    else if (key == "name") h.name = value;
    else throw ParseError("unknown header field '" + key + "'", no);
  }
  if (!have_q || !have_r || !have_c) throw ParseError("header needs q=, rows= and cols=", no);
  return h;
}

// Reads a header and its rows from `lines` starting at index `pos`.
inline std::pair<MatrixHeader, Matrix> read_matrix_block(const std::vector<std::string>& lines, std::size_t& pos,
                                                         std::size_t line_offset = 0) {
  auto skip = [&] {
    while (pos < lines.size()) {
      const auto f = lines[pos].find_first_not_of(" \t\r");
      if (f != std::string::npos && lines[pos][f] != '#') break;
      ++pos;
    }
  };
  skip();
  if (pos >= lines.size()) throw ParseError("missing matrix header", line_offset + pos + 1);
  const MatrixHeader h = parse_matrix_header(lines[pos], line_offset + pos + 1);
  ++pos;
  const Field* f = nullptr;
  try {
    f = &Field::of(h.q);
  } catch (const InvalidFieldError& e) {
    throw ParseError(e.what(), line_offset + pos);
  }
  std::vector<Element> data;
  data.reserve(h.rows * h.cols);
  for (std::size_t r = 0; r < h.rows; ++r) {
    skip();
    if (pos >= lines.size()) throw ParseError("expected " + std::to_string(h.rows) + " matrix rows", line_offset + pos + 1);
    std::istringstream is(lines[pos]);
    std::size_t count = 0;
    for (std::string tok; is >> tok; ++count) {
      const std::size_t v = parse_count(tok, "entry", line_offset + pos + 1);
      if (v >= h.q) throw ParseError("entry " + tok + " outside GF(" + std::to_string(h.q) + ")", line_offset + pos + 1);
      data.push_back(static_cast<Element>(v));
    }
    if (count != h.cols)
      throw ParseError("row has " + std::to_string(count) + " entries, expected " + std::to_string(h.cols),
                       line_offset + pos + 1);
    ++pos;
  }
  return {h, Matrix(*f, h.rows, h.cols, std::move(data))};
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    lines.push_back(l);
  }
  return lines;
}

}  // namespace detail

inline std::string format_matrix(const Matrix& m, const std::string& extra_header = {}) {
  std::string s = "q=" + std::to_string(m.field().order()) + " rows=" + std::to_string(m.rows()) +
                  " cols=" + std::to_string(m.cols());
  if (!extra_header.empty()) s += " " + extra_header;
  s += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) s += detail::join(m.row(i)) + "\n";
  return s;
}

inline Matrix parse_matrix(const std::string& text) {
  const auto lines = detail::split_lines(text);
  std::size_t pos = 0;
  return detail::read_matrix_block(lines, pos).second;
}

inline std::string format_code(const LinearCode& c) {
  std::string extra = "kind=generator";
  if (!c.name().empty()) extra += " name=" + sanitize_token(c.name());
  return format_matrix(c.generator(), extra);
}

inline LinearCode parse_code(const std::string& text) {
  const auto lines = detail::split_lines(text);
  std::size_t pos = 0;
  auto [h, m] = detail::read_matrix_block(lines, pos);
  if (!h.kind.empty() && h.kind != "generator") throw ParseError("unsupported code kind '" + h.kind + "'");
  return LinearCode(std::move(m), h.name);
}

inline LinearCode load_code(const std::string& path) {
  try {
    return parse_code(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Certificates

inline std::string format_certificate(const PropagationStep& s) {
  std::string t = "#v1 certificate\n";
  t += "rule " + s.rule + "\n";
  t += "input " + to_record_line(s.input) + "\n";
  t += "output " + to_record_line(s.output) + "\n";
  for (const auto& [k, v] : s.args) t += "arg " + k + " " + v + "\n";
  if (s.input_code) t += "input_code\n" + format_matrix(*s.input_code);
  if (s.output_code) t += "output_code\n" + format_matrix(*s.output_code);
  t += "end\n";
  return t;
}

inline PropagationStep parse_certificate(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("#v1", 0) != 0) throw ParseError("certificate must start with '#v1'", 1);
  PropagationStep s;
  bool ended = false;
  for (std::size_t pos = 1; pos < lines.size();) {
    const std::string& l = lines[pos];
    const std::size_t no = pos + 1;
    if (l.empty() || l[0] == '#') {
      ++pos;
      continue;
    }
    const auto sp = l.find(' ');
    const std::string key = l.substr(0, sp), rest = sp == std::string::npos ? "" : l.substr(sp + 1);
    if (key == "rule") s.rule = rest, ++pos;
    else if (key == "input") s.input = parse_record_line(rest, no), ++pos;
    else if (key == "output") s.output = parse_record_line(rest, no), ++pos;
    else if (key == "arg") {
      const auto sp2 = rest.find(' ');
      s.args.emplace_back(rest.substr(0, sp2), sp2 == std::string::npos ? "" : rest.substr(sp2 + 1));
      ++pos;
    } else if (key == "input_code" || key == "output_code") {
      ++pos;
      auto m = detail::read_matrix_block(lines, pos).second;
      (key == "input_code" ? s.input_code : s.output_code) = std::move(m);
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      throw ParseError("unknown certificate field '" + key + "'", no);
    }
  }
  if (!ended) throw ParseError("certificate has no 'end' line");
  if (s.rule.empty()) throw ParseError("certificate has no rule");
  return s;
}

inline Vector parse_vector(const std::string& text, const Field& f) {
  Vector v;
  std::istringstream is(text);
  for (std::string tok; is >> tok;) {
    const std::size_t x = detail::parse_count(tok, "vector entry", 0);
    if (x >= f.order()) throw ParseError("vector entry " + tok + " outside the field");
    v.push_back(static_cast<Element>(x));
  }
  return v;
}

/// Re-runs a certified step from its recorded inputs.
inline PropagationStep replay(const PropagationStep& s, const DistanceOptions& opts = {}) {
  auto need = [&](const std::string& key) -> const std::string& {
    const std::string* v = s.arg(key);
    if (!v) throw ParseError("certificate for " + s.rule + " lacks arg '" + key + "'");
    return *v;
  };
  if (s.rule.rfind("simple_", 0) == 0) {
    const int rule = std::stoi(s.rule.substr(7));
    PropagationStep out = s;
    out.output = apply_simple_rule(s.input, rule);
    return out;
  }
  if (!s.input_code) throw ParseError("certificate for " + s.rule + " lacks input_code");
  const LinearCode y(*s.input_code);
  if (s.rule == "more_ent") {
    return more_entanglement(y, hermitian_construct(y, opts), std::stoul(need("i"))).step;
  }
  if (s.rule == "same_ent") {
    return same_entanglement_with(y, hermitian_construct(y, opts), parse_vector(need("column"), y.field()), opts).step;
  }
  if (s.rule == "less_ent") {
    return less_entanglement_with(y, hermitian_construct(y, opts), parse_vector(need("codeword"), y.field()), opts).step;
  }
  if (s.rule == "hull_reduce") {
    const std::string& t = need("target");
    return classical_step(s.rule, y, hull_reduce(y, std::stoul(t)).code, s.args, opts);
  }
  if (s.rule == "extend_column") {
    return classical_step(s.rule, y, append_column(y, parse_vector(need("column"), y.field())), s.args, opts);
  }
  if (s.rule == "extend_row_column") {
    return classical_step(s.rule, y, extend_row_column(y, parse_vector(need("codeword"), y.field())).code, s.args, opts);
  }
  throw ParseError("cannot replay rule '" + s.rule + "'");
}

/// True when replaying reproduces the recorded output parameters and code.
inline bool replay_matches(const PropagationStep& recorded, const PropagationStep& again) {
  return to_record_line(recorded.output) == to_record_line(again.output) &&
         recorded.output_code.has_value() == again.output_code.has_value() &&
         (!recorded.output_code || *recorded.output_code == *again.output_code);
}

}  // namespace eaqecc
