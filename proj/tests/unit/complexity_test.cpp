// Copyright 2026 The rcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "rcap/complexity.hpp"
#include "rcap/errors.hpp"
#include "rcap/random.hpp"
#include "support/support.hpp"

namespace rcap {
namespace {

X3cInstance random_x3c(Rng& rng, int universe, int triples) {
  X3cInstance x{universe, {}};
  while (static_cast<int>(x.triples.size()) < triples) {
    std::array<int, 3> t{};
    t[0] = static_cast<int>(rng.index(universe));
    do t[1] = static_cast<int>(rng.index(universe)); while (t[1] == t[0]);
    do t[2] = static_cast<int>(rng.index(universe)); while (t[2] == t[0] || t[2] == t[1]);
    x.triples.push_back(t);
  }
  return x;
}

TEST(ValidateX3c, Rejects) {
  EXPECT_THROW(validate_x3c({4, {}}), MalformedInputError);
  EXPECT_THROW(validate_x3c({3, {{0, 1, 1}}}), MalformedInputError);
  EXPECT_THROW(validate_x3c({3, {{0, 1, 3}}}), MalformedInputError);
  EXPECT_NO_THROW(validate_x3c({6, {{0, 1, 2}, {3, 4, 5}}}));
}

TEST(X3cReduce, RangeShape) {
  const X3cInstance x{6, {{0, 1, 2}, {3, 4, 5}, {0, 3, 5}}};
  const Instance inst = x3c_reduce(x, ReductionVariant::kRange);
  EXPECT_TRUE(validate_instance(inst).empty());
  EXPECT_EQ(inst.num_stations(), 3);
  EXPECT_EQ(inst.num_zones(), 6);
  EXPECT_EQ(inst.vessels[0].count, 2);
  EXPECT_EQ(inst.vessels[1].count, 1);
  EXPECT_TRUE(inst.relations.reaches(0, 2, 3));
  EXPECT_FALSE(inst.relations.reaches(0, 2, 1));
  EXPECT_EQ(inst.relations.reach_count(), 9u);
}

TEST(X3cReduce, SpeedShape) {
  const X3cInstance x{6, {{0, 1, 2}, {3, 4, 5}}};
  const Instance inst = x3c_reduce(x, ReductionVariant::kSpeed);
  EXPECT_TRUE(validate_instance(inst).empty());
  EXPECT_EQ(inst.distances(0, 1), 1.0);
  EXPECT_EQ(inst.distances(0, 4), 2.0);
  EXPECT_EQ(inst.vessels[1].speed_kn, 0.5);
  EXPECT_EQ(inst.vessels[1].count, 0);
}

TEST(X3cReduce, WitnessMeetsThreshold) {
  const X3cInstance x{9, {{0, 1, 2}, {3, 4, 8}, {0, 4, 5}, {5, 6, 7}, {1, 2, 3}}};
  const auto cover = testing::find_exact_cover(x);
  ASSERT_TRUE(cover);
  const Instance range = x3c_reduce(x, ReductionVariant::kRange);
  const Allocation a = x3c_witness(x, *cover);
  EXPECT_TRUE(validate_allocation(range, a).empty());
  const auto r = optimal_dispatch(range, make_variant(range, VariantTag::kBestTidal), a);
  EXPECT_TRUE(r.objective);

  const Instance speed = x3c_reduce(x, ReductionVariant::kSpeed);
  const auto s = optimal_dispatch(speed, make_variant(speed, VariantTag::kBestTidal), a);
  ASSERT_TRUE(s.objective);
  EXPECT_NEAR(*s.objective, 3.0 * x.q(), 1e-12);
}

TEST(X3cReduce, MatchesExactCoverOnRandomFamilies) {
  Rng rng(17);
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int universe = 3 * (1 + static_cast<int>(rng.index(3)));
    X3cInstance x = random_x3c(rng, universe, 1 + static_cast<int>(rng.index(6)));
    if (trial % 3 == 0 && universe <= 3 * static_cast<int>(x.triples.size())) {
      // Plant a cover in the first q triples.
      std::vector<int> perm(static_cast<std::size_t>(universe));
      for (int e = 0; e < universe; ++e) perm[e] = e;
      for (int e = universe - 1; e > 0; --e) std::swap(perm[e], perm[rng.index(e + 1)]);
      for (int d = 0; d < universe / 3; ++d) x.triples[d] = {perm[3 * d], perm[3 * d + 1], perm[3 * d + 2]};
    }
    const bool cover = testing::has_exact_cover(x);
    yes += cover;
    const auto range = brute_force_solve(x3c_reduce(x, ReductionVariant::kRange), VariantTag::kBestTidal);
    EXPECT_EQ(range.objective.has_value(), cover) << "trial " << trial;
    const auto speed = brute_force_solve(x3c_reduce(x, ReductionVariant::kSpeed), VariantTag::kBestTidal);
    if (static_cast<int>(x.triples.size()) >= x.q()) {
      ASSERT_TRUE(speed.objective);
      EXPECT_EQ(*speed.objective <= 3.0 * x.q() + 1e-9, cover) << "trial " << trial;
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(BruteForce, TieBreaksLexicographically) {
  // Two identical stations and one vessel: both placements tie.
  Instance inst;
  inst.vessels = {{"v", 10, 1, 1, 100, {}}};
  inst.stations = {{"a", {}, 5}, {"b", {}, 5}};
  inst.zones = {{{}, {1.0}}};
  inst.incident_types = {{"k", 1.0, {}}};
  inst.relations = CompatibilityRelations(1, 2, 1, 1);
  inst.relations.set_equipped(0, 0);
  for (int j = 0; j < 2; ++j) {
    inst.relations.set_placeable(0, j);
    inst.relations.set_reaches(0, j, 0);
  }
  inst.distances = Matrix<double>(2, 1, 5.0);
  inst.tidal = TidalStateSet::single_full(2, 1);
  const auto r = brute_force_solve(inst, VariantTag::kBestTidal);
  ASSERT_TRUE(r.objective);
  EXPECT_EQ(r.allocation.encoded(), (std::vector<int>{0, 1}));
  EXPECT_EQ(r.evaluated, 3u);
}

TEST(BruteForce, GuardThrows) {
  const X3cInstance x{3, std::vector<std::array<int, 3>>(16, {0, 1, 2})};
  const Instance inst = x3c_reduce(x, ReductionVariant::kRange);
  EXPECT_THROW(brute_force_solve(inst, VariantTag::kBestTidal), TooLargeError);
}

TEST(ExactCoverOracle, SmallCases) {
  EXPECT_TRUE(testing::has_exact_cover({3, {{0, 1, 2}}}));
  EXPECT_FALSE(testing::has_exact_cover({3, {}}));
  EXPECT_FALSE(testing::has_exact_cover({6, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}}}));
  EXPECT_EQ(testing::find_exact_cover({6, {{0, 1, 3}, {0, 1, 2}, {3, 4, 5}}}), (std::vector<int>{1, 2}));
}

}  // namespace
}  // namespace rcap
