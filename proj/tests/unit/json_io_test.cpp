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
#include <nlohmann/json.hpp>

#include "rcap/cavabb.hpp"
#include "rcap/errors.hpp"
#include "rcap/json_io.hpp"
#include "support/support.hpp"

namespace rcap::io {
namespace {

TEST(InstanceJson, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance a = testing::random_small_instance(seed);
    const std::string text = instance_to_json(a);
    const Instance b = instance_from_json(text);
    EXPECT_EQ(instance_to_json(b), text);
    EXPECT_EQ(b.relations, a.relations);
    EXPECT_EQ(b.distances, a.distances);
    ASSERT_EQ(b.tidal.size(), a.tidal.size());
    for (std::size_t e = 0; e < a.tidal.size(); ++e) {
      EXPECT_EQ(b.tidal.states[e].pattern, a.tidal.states[e].pattern);
      EXPECT_EQ(b.tidal.states[e].probability, a.tidal.states[e].probability);
    }
  }
}

TEST(InstanceJson, IndicesAreOneBased) {
  const Instance a = testing::random_small_instance(3, {.relation_p = 1.0});
  const auto j = nlohmann::json::parse(instance_to_json(a));
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("compat").at("C").at(0), (nlohmann::json{1, 1}));
}

TEST(InstanceJson, Malformed) {
  EXPECT_THROW(instance_from_json("{"), MalformedInputError);
  EXPECT_THROW(instance_from_json(R"({"schema": "other"})"), MalformedInputError);
  auto j = nlohmann::json::parse(instance_to_json(testing::random_small_instance(2)));
  j["compat"]["C"].push_back({99, 1});
  EXPECT_THROW(instance_from_json(j.dump()), MalformedInputError);
}

TEST(AllocationJson, RoundTripAndBareArray) {
  const Instance inst = testing::random_small_instance(5, {.relation_p = 1.0});
  const SolveReport r = solve_cavabb(inst, VariantTag::kBestTidal);
  const std::string text = allocation_to_json(r.allocation, inst);
  EXPECT_EQ(allocation_from_json(text, inst.num_stations()), r.allocation);
  const Allocation bare = allocation_from_json(R"([{"station": 1, "vessel": 1}])", inst.num_stations());
  EXPECT_EQ(bare.vessel_at(0), 0);
  EXPECT_THROW(allocation_from_json(R"([{"station": 0, "vessel": 1}])", inst.num_stations()), MalformedInputError);
}

TEST(X3cJson, RoundTrip) {
  const X3cInstance x{6, {{0, 1, 2}, {3, 4, 5}}};
  const X3cInstance y = x3c_from_json(x3c_to_json(x));
  EXPECT_EQ(y.universe, 6);
  EXPECT_EQ(y.triples, x.triples);
  EXPECT_THROW(x3c_from_json(R"({"X": 5, "D": []})"), MalformedInputError);
}

TEST(Report, TimingsCanBeDropped) {
  const Instance inst = testing::random_small_instance(6, {.relation_p = 1.0, .full_tide = true});
  const SolveReport r = solve_cavabb(inst, VariantTag::kBestTidal);
  ReportExtras extras;
  extras.timings = false;
  extras.build_seconds = 1.5;
  const auto j = nlohmann::json::parse(report_to_json(r, inst, extras));
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_FALSE(j.contains("build_seconds"));
  EXPECT_EQ(j.at("status"), "optimal");
  extras.timings = true;
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(r, inst, extras)).contains("wall_seconds"));
}

TEST(GeoJson, RegionKinds) {
  const geo::Region poly = region_from_geojson(
      R"({"type": "Polygon", "coordinates": [[[0, 0], [10, 0], [10, 10], [0, 10], [0, 0]]]})");
  EXPECT_TRUE(poly.contains({5, 5}));
  const geo::Region multi = region_from_geojson(R"({"type": "FeatureCollection", "features": [
      {"type": "Feature", "geometry": {"type": "MultiPolygon", "coordinates": [
        [[[0, 0], [1, 0], [1, 1], [0, 0]]], [[[5, 5], [6, 5], [6, 6], [5, 5]]]]}}]})");
  EXPECT_EQ(multi.polygons().size(), 2u);
  EXPECT_THROW(region_from_geojson(R"({"type": "Point", "coordinates": [0, 0]})"), MalformedInputError);
}

TEST(GeoJson, AllocationFeatures) {
  const Instance inst = testing::random_small_instance(7, {.relation_p = 1.0});
  const SolveReport r = solve_cavabb(inst, VariantTag::kBestTidal);
  const auto j = nlohmann::json::parse(allocation_geojson(inst, r.allocation));
  EXPECT_EQ(j.at("type"), "FeatureCollection");
  EXPECT_EQ(j.at("features").size(), static_cast<std::size_t>(inst.num_stations() + inst.num_zones()));
  // GeoJSON order is lon, lat.
  EXPECT_EQ(j.at("features").at(0).at("geometry").at("coordinates").at(0), inst.stations[0].position.lon);
}

TEST(DistanceCsv, Layout) {
  Matrix<double> d(2, 3, 1.5);
  const std::string csv = distance_csv(d);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace rcap::io
