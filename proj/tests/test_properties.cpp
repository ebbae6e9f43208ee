// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "suites.hpp"

namespace {

constexpr std::size_t kCases = 200;

void expect_ok(const suites::Outcome& o) {
  EXPECT_GE(o.cases, kCases);
  EXPECT_EQ(o.failures, 0u) << o.first_failure;
}

TEST(Properties, HullMatchesIntersection) { expect_ok(suites::hull_vs_intersection(101, kCases)); }
TEST(Properties, HullInvariantUnderPermutation) { expect_ok(suites::hull_permutation_invariance(102, kCases)); }
TEST(Properties, HullReduceHitsEveryTarget) { expect_ok(suites::hull_reduce_targets(103, kCases)); }
TEST(Properties, ExtendColumnDistanceAndHull) { expect_ok(suites::extend_column_bounds(104, kCases)); }
TEST(Properties, ExtendRowColumnDistanceAndHull) { expect_ok(suites::extend_row_column_distance(105, kCases)); }
TEST(Properties, MinEntanglementAndPunctureSpace) { expect_ok(suites::min_entanglement_vs_puncture(106, kCases)); }
TEST(Properties, CssFormulasAgree) { expect_ok(suites::css_formulas(107, kCases)); }

TEST(Properties, SameSeedSameOutcome) {
  const auto a = suites::extend_column_bounds(9, 20), b = suites::extend_column_bounds(9, 20);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.first_failure, b.first_failure);
}

TEST(Properties, PlantedHullIsAtLeastRequested) {
  eaqecc::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto& f = suites::pick_field(rng, {4, 9, 16, 25});
    const std::size_t k = suites::pick(rng, 1, 5), l = suites::pick(rng, 0, k);
    const std::size_t n = suites::pick(rng, k + l, k + l + 3);
    const auto c = suites::hulled_code(f, n, k, l, rng);
    EXPECT_EQ(c.dimension(), k);
    EXPECT_GE(eaqecc::hull_dimension(c), l);
  }
}

}  // namespace
