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

#include <cmath>

#include <gtest/gtest.h>

#include "rcap/dispatch.hpp"
#include "rcap/errors.hpp"
#include "rcap/random.hpp"
#include "support/support.hpp"

namespace rcap {
namespace {

constexpr VariantTag kTags[] = {VariantTag::kBestTidal, VariantTag::kBetterTidal, VariantTag::kManyZones};

bool has_fleet(const Instance& inst) { return inst.total_fleet() > 0; }

std::vector<int> random_allocation(const Instance& inst, Rng& rng) {
  std::vector<int> at(static_cast<std::size_t>(inst.num_stations()), -1);
  std::vector<int> left;
  for (const VesselType& v : inst.vessels) left.push_back(v.count);
  for (int j = 0; j < inst.num_stations(); ++j) {
    const int i = static_cast<int>(rng.index(inst.vessels.size() + 1)) - 1;
    if (i >= 0 && left[i] > 0 && inst.relations.placeable(i, j)) {
      at[j] = i;
      --left[i];
    }
  }
  return at;
}

Allocation to_allocation(const std::vector<int>& at) {
  Allocation a(static_cast<int>(at.size()));
  for (std::size_t j = 0; j < at.size(); ++j) {
    if (at[j] >= 0) a.assign(static_cast<int>(j), at[j]);
  }
  return a;
}

TEST(VariantTag, ParseAndPrint) {
  for (VariantTag tag : kTags) EXPECT_EQ(parse_variant(to_string(tag)), tag);
  EXPECT_THROW(parse_variant("best"), ParameterError);
}

TEST(MakeVariant, AxisMatchesNaive) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    for (VariantTag tag : kTags) {
      if (tag == VariantTag::kManyZones && !has_fleet(inst)) continue;
      const ModelVariant v = make_variant(inst, tag);
      const testing::NaiveAxis axis = testing::naive_axis(inst, tag);
      ASSERT_EQ(static_cast<std::size_t>(v.scenarios()), axis.weight.size()) << "seed " << seed;
      double total = 0.0;
      for (int t = 0; t < v.scenarios(); ++t) {
        EXPECT_NEAR(v.weights[t], axis.weight[t], 1e-12);
        total += v.weights[t];
        for (int j = 0; j < inst.num_stations(); ++j) {
          for (int i = 0; i < inst.num_vessels(); ++i) {
            EXPECT_EQ(v.is_operable(j, i, t), axis.operable[t][j * inst.num_vessels() + i]);
          }
        }
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(MakeVariant, IntervalWeightsAreWidths) {
  const Instance inst = testing::random_small_instance(3);
  const ModelVariant v = make_variant(inst, VariantTag::kBetterTidal);
  ASSERT_EQ(v.intervals.size(), static_cast<std::size_t>(v.scenarios()));
  for (int t = 0; t < v.scenarios(); ++t) EXPECT_DOUBLE_EQ(v.weights[t], v.intervals.intervals[t].width());
  EXPECT_TRUE(make_variant(inst, VariantTag::kBestTidal).intervals.intervals.empty());
}

TEST(MakeVariant, Errors) {
  Instance inst = testing::random_small_instance(4);
  EXPECT_THROW(make_variant(inst, VariantTag::kBetterTidal, nullptr), ConfigurationError);
  for (VesselType& v : inst.vessels) v.count = 0;
  EXPECT_THROW(make_variant(inst, VariantTag::kManyZones), DivisionByZeroError);
}

TEST(Dispatch, ObjectiveMatchesNaive) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    Rng rng(seed, 1);
    for (VariantTag tag : kTags) {
      if (tag == VariantTag::kManyZones && !has_fleet(inst)) continue;
      const ModelVariant v = make_variant(inst, tag);
      const DispatchContext ctx(inst, v);
      const auto axis = testing::naive_axis(inst, tag);
      for (int trial = 0; trial < 10; ++trial) {
        const auto at = random_allocation(inst, rng);
        const auto want = testing::naive_objective(inst, axis, at);
        const DispatchResult got = ctx.dispatch(to_allocation(at));
        const double value = ctx.allocation_value(at);
        if (want) {
          ASSERT_TRUE(got.objective) << "seed " << seed;
          EXPECT_NEAR(*got.objective, *want, 1e-9);
          EXPECT_NEAR(value, *want, 1e-9);
          EXPECT_EQ(got.unserved_count, 0u);
        } else {
          EXPECT_FALSE(got.objective && ctx.fully_coverable()) << "seed " << seed;
          if (ctx.fully_coverable()) {
            EXPECT_TRUE(std::isinf(value));
          }
        }
      }
    }
  }
}

TEST(Dispatch, PlanPicksFastestResponder) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    const ModelVariant v = make_variant(inst, VariantTag::kBestTidal);
    Rng rng(seed, 2);
    const auto at = random_allocation(inst, rng);
    const DispatchResult res = optimal_dispatch(inst, v, to_allocation(at));
    ASSERT_TRUE(res.plan);
    for (int k = 0; k < inst.num_incident_types(); ++k) {
      for (int r = 0; r < inst.num_zones(); ++r) {
        for (int e = 0; e < v.scenarios(); ++e) {
          const auto j = res.plan->responder(k, r, e);
          if (!j) continue;
          const int i = at[*j];
          ASSERT_GE(i, 0);
          const double hours = inst.distances(*j, r) / inst.vessels[i].speed_kn;
          for (int jj = 0; jj < inst.num_stations(); ++jj) {
            const int ii = at[jj];
            if (ii < 0 || !inst.relations.equipped(ii, k) || !inst.relations.reaches(ii, jj, r) ||
                !v.is_operable(jj, ii, e)) {
              continue;
            }
            EXPECT_LE(hours, inst.distances(jj, r) / inst.vessels[ii].speed_kn);
          }
        }
      }
    }
  }
}

TEST(Dispatch, PerIncidentSumsToObjective) {
  const Instance inst = testing::random_small_instance(21, {.relation_p = 1.0});
  const ModelVariant v = make_variant(inst, VariantTag::kBestTidal);
  const DispatchContext ctx(inst, v);
  std::vector<int> at(static_cast<std::size_t>(inst.num_stations()), -1);
  std::vector<int> left;
  for (const VesselType& vt : inst.vessels) left.push_back(vt.count);
  for (int j = 0; j < inst.num_stations(); ++j) {
    for (int i = 0; i < inst.num_vessels(); ++i) {
      if (left[i] > 0) {
        at[j] = i;
        --left[i];
        break;
      }
    }
  }
  const DispatchResult res = ctx.dispatch(to_allocation(at));
  double sum = 0.0;
  for (double p : res.per_incident) sum += p;
  EXPECT_NEAR(sum, res.covered_objective, 1e-9);
  if (res.objective) {
    EXPECT_NEAR(*res.objective, res.covered_objective, 1e-12);
  }
}

TEST(Dispatch, OptimisticValueBoundsEveryAllocation) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    const ModelVariant v = make_variant(inst, VariantTag::kBestTidal);
    const DispatchContext ctx(inst, v);
    std::vector<std::uint8_t> alive(static_cast<std::size_t>(inst.num_stations() * inst.num_vessels()), 0);
    for (int j = 0; j < inst.num_stations(); ++j) {
      for (int i = 0; i < inst.num_vessels(); ++i) {
        alive[j * inst.num_vessels() + i] = inst.relations.placeable(i, j) && inst.vessels[i].count > 0;
      }
    }
    const double bound = ctx.optimistic_value(alive);
    Rng rng(seed, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const double value = ctx.allocation_value(random_allocation(inst, rng));
      if (std::isfinite(value)) {
        EXPECT_LE(bound, value + 1e-9);
      }
    }
  }
}

TEST(DispatchContext, CandidatesSortedWithTies) {
  const Instance inst = testing::random_small_instance(9, {.relation_p = 1.0});
  const ModelVariant v = make_variant(inst, VariantTag::kBestTidal);
  const DispatchContext ctx(inst, v);
  for (int r = 0; r < inst.num_zones(); ++r) {
    const auto& c = ctx.candidates(r);
    for (std::size_t a = 1; a < c.size(); ++a) {
      const bool ordered = c[a - 1].hours < c[a].hours ||
                           (c[a - 1].hours == c[a].hours &&
                            std::pair(c[a - 1].station, c[a - 1].vessel) < std::pair(c[a].station, c[a].vessel));
      EXPECT_TRUE(ordered);
    }
  }
}

TEST(DispatchContext, MismatchedVariantThrows) {
  const Instance a = testing::random_small_instance(1, {.max_stations = 2});
  const Instance b = testing::random_small_instance(2, {.max_stations = 6});
  ModelVariant v = make_variant(b, VariantTag::kBestTidal);
  v.stations = a.num_stations() + 1;
  EXPECT_THROW(DispatchContext(a, v), MalformedInputError);
}

}  // namespace
}  // namespace rcap
