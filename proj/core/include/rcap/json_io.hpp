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

// JSON and GeoJSON file formats. All indices in files are 1-based.
//
// Instance ("schema": "rcap-1"):
//   vessels         [{name, speed_kn, draught_m, count, range_nm, equipment}]
//   stations        [{name, lat, lon, base_depth_m}]
//   zones           [{lat, lon, frequencies}]
//   incident_types  [{name, severity, required_equipment}]
//   compat          {C: [[i, j]], B: [[i, k]], S: [[i, j, r]]}
//   distances       [[d_11, .., d_1z], ..]  (stations x zones)
//   tidal           [{pattern: [[j, i]], p, count}]
//   tidal_samples   total sample count (optional)

#ifndef RCAP_JSON_IO_HPP_
#define RCAP_JSON_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcap/cavabb.hpp"
#include "rcap/complexity.hpp"
#include "rcap/evaluate.hpp"
#include "rcap/geo.hpp"
#include "rcap/ip_model.hpp"
#include "rcap/model.hpp"

namespace rcap::io {

inline constexpr const char* kSchema = "rcap-1";

std::string read_text_file(const std::string& path);
// Writes atomically enough for our purposes: truncate then write.
void write_text_file(const std::string& path, std::string_view text);

// All parsers throw MalformedInputError with the offending field.
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(std::string_view text);
Instance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& instance);

// {"schema", "stations": m, "allocation": [{"station": j, "vessel": i}]}
std::string allocation_to_json(const Allocation& alloc, const Instance& instance);
Allocation allocation_from_json(std::string_view text, int stations);

// {"X": 6, "D": [[1, 2, 3], ..]}
X3cInstance x3c_from_json(std::string_view text);
std::string x3c_to_json(const X3cInstance& x3c);

struct ReportExtras {
  std::optional<int> zones;
  std::optional<Evaluation> full_resolution;
  std::optional<ModelSize> model_size;
  std::optional<double> build_seconds;
  std::optional<std::uint64_t> seed;
  // Wall clock fields are the only run-to-run differences; drop them for
  // byte-identical output.
  bool timings = true;
};

std::string report_to_json(const SolveReport& report, const Instance& instance,
                           const ReportExtras& extras = {});

// GeoJSON Polygon, MultiPolygon, Feature or FeatureCollection of those.
geo::Region region_from_geojson(std::string_view text);

// FeatureCollection with stations (and their vessel), zones and optional
// cluster centroids as Point features.
std::string allocation_geojson(const Instance& instance, const Allocation& alloc,
                               const std::vector<GeoPoint>& centroids = {});

// Zones with their frequencies and membership as Point features.
std::string clustering_geojson(const geo::ClusteringResult& clustering);

// Row per station, header of zone ids.
std::string distance_csv(const Matrix<double>& distances);

}  // namespace rcap::io

#endif  // RCAP_JSON_IO_HPP_
