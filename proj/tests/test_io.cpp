// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>

#include "eaqecc/io.hpp"
#include "eaqecc/random.hpp"

using namespace eaqecc;

namespace {

const std::string kData = EAQECC_TEST_DATA_DIR;

std::size_t parse_line_of(const std::string& text) {
  try {
    parse_code(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(MatrixText, RoundTrip) {
  Rng rng(1);
  for (unsigned q : {2u, 3u, 4u, 9u, 16u, 25u}) {
    const Matrix m = random_matrix(Field::of(q), 3, 5, rng);
    const std::string t = format_matrix(m);
    EXPECT_EQ(t.substr(0, t.find('\n')), "q=" + std::to_string(q) + " rows=3 cols=5");
    EXPECT_EQ(parse_matrix(t), m);
  }
  EXPECT_EQ(parse_matrix("# empty\nq=9 rows=0 cols=4\n").cols(), 4u);
}

TEST(CodeText, RoundTripKeepsName) {
  const LinearCode c = load_code(kData + "/code_16_5.txt");
  EXPECT_EQ(c.name(), "c16_5");
  EXPECT_EQ(c.field().order(), 9u);
  const LinearCode again = parse_code(format_code(c));
  EXPECT_EQ(again.generator(), c.generator());
  EXPECT_EQ(again.name(), "c16_5");
}

TEST(CodeText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_line_of("q=9 rows=2 cols=3\n1 0 3\n0 1\n"), 3u);
  EXPECT_EQ(parse_line_of("# comment\nq=9 rows=1 cols=3\n1 0 9\n"), 3u);
  EXPECT_EQ(parse_line_of("q=6 rows=1 cols=1\n1\n"), 1u);
  EXPECT_EQ(parse_line_of("q=9 rows=1\n1\n"), 1u);
  EXPECT_EQ(parse_line_of("q=9 rows=1 cols=2 size=4\n1 1\n"), 1u);
  EXPECT_EQ(parse_line_of("q=9 rows=2 cols=2\n1 1\n"), 3u);
  EXPECT_EQ(parse_line_of("q=9 rows=1 cols=2\n1 x\n"), 2u);
  EXPECT_THROW(parse_code("q=9 rows=1 cols=2 kind=parity\n1 1\n"), ParseError);
  EXPECT_THROW(parse_code("q=9 rows=2 cols=2\n1 1\n2 2\n"), PreconditionError);
}

TEST(CodeText, LoadNamesThePath) {
  try {
    load_code(kData + "/table_qubit.txt");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("table_qubit.txt"), std::string::npos);
  }
  EXPECT_THROW(load_code(kData + "/no_such_code.txt"), Error);
}

TEST(Vector, Parse) {
  const Field& f = Field::of(9);
  EXPECT_EQ(parse_vector("1 7 4 5", f), (Vector{1, 7, 4, 5}));
  EXPECT_THROW(parse_vector("1 9", f), ParseError);
  EXPECT_THROW(parse_vector("1 -1", f), ParseError);
}

PropagationStep sample_step() {
  const LinearCode y = hermitian_dual(load_code(kData + "/code_5_4.txt"));
  return same_entanglement(y).step;
}

TEST(Certificate, RoundTripAndReplay) {
  const PropagationStep s = sample_step();
  const std::string text = format_certificate(s);
  EXPECT_EQ(text.rfind("#v1 certificate\n", 0), 0u);
  const PropagationStep back = parse_certificate(text);
  EXPECT_EQ(format_certificate(back), text);
  EXPECT_TRUE(replay_matches(back, replay(back)));
  PropagationStep forged = back;
  forged.output.delta.value += 1;
  EXPECT_FALSE(replay_matches(forged, replay(forged)));
}

TEST(Certificate, ReplayEveryClassicalRule) {
  const LinearCode c5 = load_code(kData + "/code_5_4.txt");
  const LinearCode c29 = load_code(kData + "/code_29_14.txt");
  const auto ext = extend_column(c5);
  const auto s1 = classical_step("extend_column", c5, ext.code, {{"column", detail::join(ext.column)}});
  EXPECT_TRUE(replay_matches(s1, replay(parse_certificate(format_certificate(s1)))));

  const std::vector<std::size_t> rows{0, 1, 2};
  const LinearCode small(c29.generator().select_rows(rows));
  DistanceOptions o;
  const auto r = hull_reduce(small, 1);
  const auto s2 = classical_step("hull_reduce", small, r.code, {{"target", "1"}}, o);
  EXPECT_TRUE(replay_matches(s2, replay(parse_certificate(format_certificate(s2)), o)));

  const auto s3 = simple_rule_step(make_params(3, 6, 1, 5, 3, Purity::pure()), 8);
  const auto back = parse_certificate(format_certificate(s3));
  EXPECT_TRUE(replay_matches(back, replay(back)));
  EXPECT_EQ(to_record_line(back.output), "3 5 2 4 3 pure rule8");
}

TEST(Certificate, ParseErrors) {
  EXPECT_THROW(parse_certificate("rule x\nend\n"), ParseError);
  EXPECT_THROW(parse_certificate("#v1 certificate\nrule simple_1\n"), ParseError);
  EXPECT_THROW(parse_certificate("#v1 certificate\nend\n"), ParseError);
  try {
    parse_certificate("#v1 certificate\nrule simple_1\nbogus 1\nend\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  const auto s = parse_certificate("#v1 certificate\nrule more_ent\narg i 1\nend\n");
  EXPECT_THROW(replay(s), ParseError);
}

TEST(Files, WriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "eaqecc_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "c.txt").string();
  const LinearCode c = load_code(kData + "/code_5_4.txt");
  write_text_file(path, format_code(c));
  EXPECT_EQ(load_code(path).generator(), c.generator());
  std::filesystem::remove_all(dir);
}

}  // namespace
