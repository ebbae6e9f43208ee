// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "eaqecc/distance.hpp"
#include "eaqecc/io.hpp"
#include "eaqecc/random.hpp"
#include "oracles.hpp"

using namespace eaqecc;

namespace {

const std::string kData = EAQECC_TEST_DATA_DIR;

DistanceOptions with(DistanceOptions::Strategy s, std::uint64_t limit = 0) {
  DistanceOptions o;
  o.strategy = s;
  o.work_limit = limit;
  return o;
}
const auto kEnum = DistanceOptions::Strategy::enumerate;
const auto kInfo = DistanceOptions::Strategy::information_sets;

LinearCode hamming7() {
  return LinearCode(Matrix::from_rows(Field::of(2),
                                      {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}},
                                      7));
}

TEST(Distance, HammingAndSimplex) {
  const LinearCode h = hamming7();
  for (auto s : {kEnum, kInfo}) {
    EXPECT_EQ(min_distance(h, with(s)).value, 3u);
    EXPECT_EQ(min_distance(euclidean_dual(h), with(s)).value, 4u);
  }
}

TEST(Distance, WitnessIsACodewordOfThatWeight) {
  const LinearCode h = hamming7();
  for (auto s : {kEnum, kInfo}) {
    const auto d = min_distance(h, with(s));
    EXPECT_TRUE(d.exact());
    EXPECT_EQ(weight(d.witness), d.value);
    EXPECT_TRUE(h.contains(d.witness));
  }
}

TEST(Distance, ZeroCodeConvention) {
  const auto d = min_distance(LinearCode::zero(Field::of(9), 5));
  EXPECT_TRUE(d.exact());
  EXPECT_EQ(d.value, 6u);
  EXPECT_EQ(d.method, DistanceMethod::convention);
}

TEST(Distance, FullSpaceAndRepetition) {
  const Field& f = Field::of(5);
  EXPECT_EQ(min_distance(LinearCode::full(f, 6)).value, 1u);
  EXPECT_EQ(min_distance(LinearCode(Matrix::from_rows(f, {{1, 2, 3, 4, 1, 1}}, 6))).value, 6u);
  EXPECT_EQ(min_distance(LinearCode(Matrix::from_rows(f, {{1, 2, 3, 4, 1, 1}}, 6)), with(kInfo)).value, 6u);
}

TEST(Distance, StrategiesAgreeWithOracle) {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const Field& f = Field::of(q);
    const oracle::Arith a(f);
    Rng rng(q * 31);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 3 + rng.below(6);
      std::size_t k = 1 + rng.below(std::min<std::size_t>(n, 4));
      while (saturating_power(q, k) > 20000) --k;
      const LinearCode c(random_full_rank(f, k, n, rng));
      const std::size_t expect = oracle::distance(a, c.generator());
      EXPECT_EQ(min_distance(c, with(kEnum)).value, expect);
      EXPECT_EQ(min_distance(c, with(kInfo)).value, expect);
    }
  }
}

TEST(Distance, WorkLimitGivesAnHonestBracket) {
  const LinearCode c = load_code(kData + "/code_16_5.txt");
  const LinearCode y = hermitian_dual(c);
  const auto d = min_distance(y, with(kInfo, 200));
  EXPECT_FALSE(d.exact());
  EXPECT_LE(d.lower, 5u);
  EXPECT_GE(d.upper, 5u);
  EXPECT_EQ(d.work, 200u);
}

TEST(WeightOutside, MatchesOracle) {
  for (unsigned q : {4u, 9u}) {
    const Field& f = Field::of(q);
    const oracle::Arith a(f);
    Rng rng(q * 13);
    int checked = 0;
    while (checked < 20) {
      const std::size_t n = 4 + rng.below(3);
      const LinearCode big(random_full_rank(f, 3, n, rng));
      const Matrix sub_rows = random_full_rank(f, 1 + rng.below(2), 3, rng) * big.generator();
      const LinearCode sub(sub_rows);
      const std::size_t expect = oracle::distance_outside(a, big.generator(), sub.generator());
      for (auto s : {kEnum, kInfo}) {
        const auto d = min_weight_outside(big, sub, with(s));
        EXPECT_EQ(d.value, expect);
        EXPECT_FALSE(sub.contains(d.witness));
      }
      ++checked;
    }
  }
}

TEST(WeightOutside, Preconditions) {
  const Field& f = Field::of(9);
  const LinearCode big = LinearCode::full(f, 3);
  const LinearCode other(Matrix::from_rows(f, {{1, 1, 1}}, 3));
  EXPECT_THROW(min_weight_outside(other, big), PreconditionError);
  EXPECT_THROW(min_weight_outside(big, big), EmptySetError);
  EXPECT_EQ(min_weight_outside(big, LinearCode::zero(f, 3)).value, 1u);
}

TEST(Distance, BundledSixteenFive) {
  const LinearCode c = load_code(kData + "/code_16_5.txt");
  const auto d = min_distance(c);
  EXPECT_EQ(d.value, 8u);
  EXPECT_EQ(d.method, DistanceMethod::enumeration);
  EXPECT_EQ(min_distance(hull_code(c)).value, 12u);
}

TEST(Distance, DescribeFormats) {
  EXPECT_EQ(DistanceFact::make_exact(5, DistanceMethod::enumeration).describe(), "5");
  EXPECT_EQ(DistanceFact::make_lower(10, 11, DistanceMethod::information_sets).describe(), ">=10 (<=11)");
  EXPECT_EQ(DistanceFact::make_lower(10, kNoBound, DistanceMethod::information_sets).describe(), ">=10");
  EXPECT_EQ(DistanceFact::make_upper(7, DistanceMethod::theorem).describe(), "<=7");
}

}  // namespace
