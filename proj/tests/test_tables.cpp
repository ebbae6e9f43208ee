// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "eaqecc/bounds.hpp"
#include "eaqecc/tables.hpp"

using namespace eaqecc;

namespace {

const std::string kData = EAQECC_TEST_DATA_DIR;

RecordFile qubit() { return load_record_file(kData + "/table_qubit.txt"); }
RecordFile qutrit() { return load_record_file(kData + "/table_qutrit.txt"); }

ExpandOptions small(std::size_t max_n) {
  ExpandOptions o;
  o.max_n = max_n;
  return o;
}

TEST(Fnv, PublishedVectors) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
  EXPECT_EQ(hex64(fnv1a64("foobar")), "85944171f73967e8");
}

TEST(RecordLine, RoundTrip) {
  const auto p = parse_record_line("3 6 1 5 3 pure constructed");
  EXPECT_EQ(p.str(), "[[6,1,5;3]]_3");
  EXPECT_TRUE(p.purity.is_pure());
  EXPECT_EQ(p.route, Route::hermitian);
  EXPECT_EQ(to_record_line(p), "3 6 1 5 3 pure constructed");
  const auto lo = parse_record_line("3 29 1 >=10 0 unknown hermitian");
  EXPECT_EQ(lo.delta.certainty, Certainty::lower_bound);
  EXPECT_EQ(to_record_line(lo), "3 29 1 >=10 0 unknown hermitian");
  const auto t = parse_record_line("2 3 1 3 2 unknown table-I");
  EXPECT_EQ(t.route, Route::table);
  EXPECT_TRUE(t.route_assumed);
}

TEST(RecordLine, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_record_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("# c\n3 6 1 5 3 pure x\n3 6 x 5 3 pure x\n"), 3u);
  EXPECT_EQ(line_of("3 6 1 5 3 pure\n"), 1u);
  EXPECT_EQ(line_of("\n\n3 6 1 5 3 clean x\n"), 3u);
  EXPECT_EQ(line_of("3 6 7 5 3 pure x\n"), 1u);
  EXPECT_EQ(line_of("3 6 1 0 3 pure x\n"), 1u);
  EXPECT_EQ(line_of("# fnv1a64 xyz\n"), 1u);
}

TEST(Ingest, BundledCounts) {
  const auto a = qubit(), b = qutrit();
  EXPECT_EQ(a.records.size(), 294u);
  EXPECT_EQ(b.records.size(), 211u);
  EXPECT_TRUE(a.checksum_ok());
  EXPECT_TRUE(b.checksum_ok());
  std::set<TableKey> keys;
  for (const auto& r : a.records) keys.insert({r.q, r.n, r.kappa, r.c});
  EXPECT_EQ(TableStore::ingest(a.records).size(), keys.size());
  for (const auto& r : a.records) EXPECT_EQ(r.q, 2u);
  for (const auto& r : b.records) EXPECT_EQ(r.q, 3u);
}

TEST(Ingest, DuplicatesCollapseToBest) {
  TableStore s;
  s.insert(parse_record_line("3 6 1 4 3 unknown b"));
  s.insert(parse_record_line("3 6 1 5 3 unknown z"));
  s.insert(parse_record_line("3 6 1 5 3 unknown a"));
  s.insert(parse_record_line("3 6 1 <=9 3 unknown a"));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.best({3, 6, 1, 3})->delta, 5u);
  EXPECT_EQ(s.best({3, 6, 1, 3})->source, "a");
  EXPECT_FALSE(s.best_pure({3, 6, 1, 3}).has_value());
  EXPECT_TRUE(TableStore().empty());
  EXPECT_TRUE(TableStore().query({}).empty());
}

TEST(Expand, SingleRuleByHand) {
  auto o = small(5);
  o.rules = {1};
  const auto s = TableStore::ingest({parse_record_line("2 3 1 3 2 unknown seed")}).expand(o);
  EXPECT_EQ(s.size(), 3u);
  for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(s.best({2, n, 1, 2})->delta, 3u);
  EXPECT_EQ(s.chain({2, 5, 1, 2}, false), (std::vector<int>{1, 1}));
  const auto recs = s.records();
  EXPECT_EQ(recs.back().source, "derived:1-1@seed");
  EXPECT_EQ(recs.back().route, Route::derived);
}

TEST(Expand, PurityClassesByHand) {
  auto o = small(6);
  o.rules = {8};
  const auto s = TableStore::ingest({parse_record_line("3 6 1 5 3 pure constructed")}).expand(o);
  // 8 maps pure [[n,k,d;c]] to pure [[n-1,k+1,d-1;c]] while c <= n - kappa.
  EXPECT_EQ(s.best_pure({3, 5, 2, 3})->delta, 4u);
  EXPECT_FALSE(s.best({3, 4, 3, 3}).has_value());
  o.rules = {1, 8};
  const auto t = TableStore::ingest({parse_record_line("3 6 1 5 3 unknown table-II")}).expand(o);
  EXPECT_FALSE(t.best({3, 5, 2, 3}).has_value());
  EXPECT_FALSE(t.best({3, 7, 1, 3}).has_value());
}

TEST(Expand, ClosureOfBundledTablesIsBoundConsistent) {
  auto recs = qubit().records;
  const auto q = qutrit().records;
  recs.insert(recs.end(), q.begin(), q.end());
  const auto store = TableStore::ingest(recs);
  std::size_t max_n = 0;
  for (const auto& r : recs) max_n = std::max(max_n, r.n);
  const auto closed = store.expand(small(max_n));
  EXPECT_GT(closed.size(), store.size());
  const auto v = table_violations(closed.records());
  EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front().first.str());
  EXPECT_TRUE(table_violations(recs).empty());
}

TEST(Store, TextRoundTrip) {
  const auto s = TableStore::ingest(qutrit().records);
  const auto again = TableStore::ingest(parse_record_text(s.to_record_text()).records);
  EXPECT_EQ(s, again);
  const std::string csv = s.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,n,kappa,delta,c,purity,source");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), s.records().size() + 1);
}

TEST(Compress, KeepsClosureAndIsIdempotent) {
  for (const auto& recs : {qubit().records, qutrit().records}) {
    const auto s = TableStore::ingest(recs);
    const auto o = small(40);
    const auto c = s.compress(o);
    EXPECT_LE(c.size(), s.size());
    EXPECT_EQ(c.compress(o), c);
    EXPECT_EQ(c.expand(o), s.expand(o));
  }
}

TEST(Compress, DropsDerivableRecord) {
  const auto s = TableStore::ingest(
      {parse_record_line("2 3 1 3 2 unknown a"), parse_record_line("2 4 1 3 2 unknown b"),
       parse_record_line("2 4 1 2 3 unknown c")});
  const auto c = s.compress(small(10));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.best({2, 3, 1, 2}).has_value());
}

TEST(Query, ClosureAndFilters) {
  auto recs = qutrit().records;
  recs.push_back(load_record_file(kData + "/constructed.txt").records.at(0));
  const auto s = TableStore::ingest(recs);
  TableFilter f;
  f.q = 3, f.n = 6, f.kappa = 1, f.c = 3;
  const auto hit = s.query(f, small(6));
  ASSERT_EQ(hit.size(), 1u);
  EXPECT_EQ(hit[0].delta.value, 5u);
  EXPECT_TRUE(hit[0].purity.is_pure());

  const auto q2 = TableStore::ingest(qubit().records);
  TableFilter g;
  g.q = 2, g.n = 3, g.kappa = 1, g.c = 2;
  const auto r = q2.query(g);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].delta.value, 3u);
  TableFilter none;
  none.q = 5;
  EXPECT_TRUE(q2.query(none, small(10)).empty());
  TableFilter by_n;
  by_n.n = 3;
  for (const auto& p : q2.query(by_n)) EXPECT_EQ(p.n, 3u);
}

TEST(Checksum, MismatchDetected) {
  std::string text = read_text_file(kData + "/table_qutrit.txt");
  const auto pos = text.find("\n3 ");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 3] = text[pos + 3] == '9' ? '8' : '9';
  RecordFile f;
  try {
    f = parse_record_text(text);
  } catch (const ParseError&) {
    GTEST_SKIP() << "edited line no longer parses";
  }
  EXPECT_FALSE(f.checksum_ok());
  EXPECT_TRUE(parse_record_text(read_text_file(kData + "/table_qutrit.txt")).checksum_ok());
  EXPECT_THROW(load_record_file(kData + "/no_such_table.txt"), Error);
}

}  // namespace
