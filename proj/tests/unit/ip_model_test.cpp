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
#include <cstdio>
#include <map>

#include <gtest/gtest.h>

#include "rcap/complexity.hpp"
#include "rcap/errors.hpp"
#include "rcap/ip_model.hpp"
#include "support/support.hpp"

namespace rcap {
namespace {

constexpr VariantTag kTags[] = {VariantTag::kBestTidal, VariantTag::kBetterTidal, VariantTag::kManyZones};
constexpr LinkForm kForms[] = {LinkForm::kAggregated, LinkForm::kDisaggregated};

std::map<std::string, double> row_terms(const LpModel& lp, const LpRow& row) {
  std::map<std::string, double> out;
  for (const LpTerm& t : row.terms) out[lp.names[t.var]] += t.coef;
  return out;
}

TEST(LinkForm, ParseAndPrint) {
  for (LinkForm f : kForms) EXPECT_EQ(parse_link_form(to_string(f)), f);
  EXPECT_THROW(parse_link_form("both"), ParameterError);
}

TEST(BuildModel, SizeMatchesCount) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    for (VariantTag tag : kTags) {
      if (tag == VariantTag::kManyZones && inst.total_fleet() == 0) continue;
      const ModelVariant v = make_variant(inst, tag);
      for (LinkForm form : kForms) {
        const IpModel ip = build_model(inst, v, form);
        const ModelSize size = model_size(inst, v, form);
        EXPECT_EQ(ip.size.x, size.x);
        EXPECT_EQ(ip.size.y, size.y);
        EXPECT_EQ(ip.size.rows(), size.rows());
        EXPECT_EQ(ip.lp.variables(), size.variables());
        EXPECT_EQ(ip.lp.rows.size(), size.rows());
        EXPECT_EQ(size.x, inst.relations.placement_count());
        std::uint64_t vessels = 0;
        std::uint64_t stations = 0;
        for (int i = 0; i < inst.num_vessels(); ++i) {
          bool any = false;
          for (int j = 0; j < inst.num_stations(); ++j) any = any || inst.relations.placeable(i, j);
          vessels += any ? 1 : 0;
        }
        for (int j = 0; j < inst.num_stations(); ++j) {
          bool any = false;
          for (int i = 0; i < inst.num_vessels(); ++i) any = any || inst.relations.placeable(i, j);
          stations += any ? 1 : 0;
        }
        EXPECT_EQ(size.fleet_rows, vessels);
        EXPECT_EQ(size.station_rows, stations);
        EXPECT_EQ(size.cover_rows,
                  static_cast<std::uint64_t>(inst.num_incident_types() * inst.num_zones() * v.scenarios()));
        if (form == LinkForm::kDisaggregated) {
          EXPECT_EQ(size.link_rows, size.y);
        }
      }
    }
  }
}

TEST(BuildModel, CostsAreWeightedTimes) {
  const Instance inst = testing::random_small_instance(8, {.relation_p = 1.0});
  const ModelVariant v = make_variant(inst, VariantTag::kBestTidal);
  const IpModel ip = build_model(inst, v);
  for (std::size_t var = 0; var < ip.lp.variables(); ++var) {
    const std::string& name = ip.lp.names[var];
    if (name[0] == 'x') {
      EXPECT_EQ(ip.lp.objective[var], 0.0);
      continue;
    }
    int i, j, k, r, t;
    ASSERT_EQ(std::sscanf(name.c_str(), "y_%d_%d_%d_%d_%d", &i, &j, &k, &r, &t), 5) << name;
    --i, --j, --k, --r, --t;
    const double want = v.weights[t] * inst.zones[r].frequencies[k] * inst.incident_types[k].severity *
                        inst.distances(j, r) / inst.vessels[i].speed_kn;
    EXPECT_NEAR(ip.lp.objective[var], want, 1e-12);
  }
}

TEST(BuildModel, ProfileOverloadNeedsProfile) {
  const Instance inst = testing::random_small_instance(2);
  EXPECT_THROW(build_model(inst, VariantTag::kBetterTidal, nullptr), ConfigurationError);
  EXPECT_NO_THROW(build_model(inst, VariantTag::kBestTidal, nullptr));
}

TEST(LpText, RoundTripCoefficients) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = testing::random_small_instance(seed);
    for (LinkForm form : kForms) {
      const IpModel ip = build_model(inst, make_variant(inst, VariantTag::kBestTidal), form);
      const std::string text = export_lp(ip.lp, "seed");
      const LpModel back = parse_lp(text);
      std::map<std::string, double> cost;
      for (std::size_t v = 0; v < back.variables(); ++v) cost[back.names[v]] = back.objective[v];
      for (std::size_t v = 0; v < ip.lp.variables(); ++v) {
        const double c = cost.count(ip.lp.names[v]) ? cost[ip.lp.names[v]] : 0.0;
        EXPECT_LE(std::abs(c - ip.lp.objective[v]), 1e-12);
      }
      ASSERT_EQ(back.rows.size(), ip.lp.rows.size());
      for (std::size_t r = 0; r < back.rows.size(); ++r) {
        EXPECT_EQ(back.rows[r].name, ip.lp.rows[r].name);
        EXPECT_EQ(back.rows[r].sense, ip.lp.rows[r].sense);
        EXPECT_LE(std::abs(back.rows[r].rhs - ip.lp.rows[r].rhs), 1e-12);
        const auto a = row_terms(ip.lp, ip.lp.rows[r]);
        const auto b = row_terms(back, back.rows[r]);
        ASSERT_EQ(a.size(), b.size());
        for (const auto& [name, coef] : a) EXPECT_LE(std::abs(b.at(name) - coef), 1e-12);
      }
      const std::string again = export_lp(back, "seed");
      EXPECT_EQ(export_lp(parse_lp(again), "seed"), again);
    }
  }
}

TEST(LpText, Sections) {
  const Instance inst = testing::random_small_instance(3);
  const std::string text = export_lp(build_model(inst, VariantTag::kBestTidal, nullptr).lp);
  for (const char* section : {"Minimize", "Subject To", "Binaries", "End"}) {
    EXPECT_NE(text.find(section), std::string::npos) << section;
  }
}

TEST(LpText, MalformedInputThrows) {
  EXPECT_THROW(parse_lp("Minimize\n obj: 2 x +\nSubject To\n c: x >= \nEnd\n"), MalformedInputError);
  EXPECT_THROW(parse_lp("garbage"), MalformedInputError);
}

TEST(LpOptimum, BothLinkFormsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::random_small_instance(seed, {.max_stations = 4, .max_zones = 4});
    for (VariantTag tag : kTags) {
      if (tag == VariantTag::kManyZones && inst.total_fleet() == 0) continue;
      const ModelVariant v = make_variant(inst, tag);
      const BruteForceResult brute = brute_force_solve(inst, v);
      for (LinkForm form : kForms) {
        const auto lp = testing::lp_enumeration_optimum(build_model(inst, v, form).lp);
        ASSERT_EQ(lp.has_value(), brute.objective.has_value()) << "seed " << seed;
        if (lp) {
          EXPECT_NEAR(*lp, *brute.objective, 1e-9) << "seed " << seed;
        }
      }
    }
  }
}

}  // namespace
}  // namespace rcap
