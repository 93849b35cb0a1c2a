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

// Great-circle distances, reachability, zone sampling and zone clustering.

#ifndef RCAP_GEO_HPP_
#define RCAP_GEO_HPP_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rcap/model.hpp"

namespace rcap::geo {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kKmPerNauticalMile = 1.852;

// Spherical great-circle distance with R = 6371 km, in nautical miles.
double haversine_nm(const GeoPoint& a, const GeoPoint& b);

// Entry (j, r) is the distance from station j to zone r.
Matrix<double> distance_matrix(std::span<const Station> stations, std::span<const Zone> zones);

struct ReachTriple {
  int vessel = 0;
  int station = 0;
  int zone = 0;

  friend bool operator==(const ReachTriple&, const ReachTriple&) = default;
};

// (i, j, r) is reachable iff d_jr <= range_i / 2.
std::vector<ReachTriple> derive_reachability(std::span<const VesselType> vessels,
                                             const Matrix<double>& distances);

// Overwrites the S relation of |instance| with derive_reachability.
void apply_reachability(Instance& instance);

struct BoundingBox {
  double lat_min = 0.0;
  double lat_max = 0.0;
  double lon_min = 0.0;
  double lon_max = 0.0;
};

struct Polygon {
  std::vector<GeoPoint> outer;               // ring, closing vertex optional
  std::vector<std::vector<GeoPoint>> holes;  // rings
};

// Sampling region: a set of polygons (planar in degrees) or a plain box.
class Region {
 public:
  explicit Region(BoundingBox box) : shape_(box) {}
  explicit Region(std::vector<Polygon> polygons);

  BoundingBox bounding_box() const;
  bool contains(const GeoPoint& p) const;
  bool is_box() const { return std::holds_alternative<BoundingBox>(shape_); }
  const std::vector<Polygon>& polygons() const;

 private:
  std::variant<BoundingBox, std::vector<Polygon>> shape_;
};

// Uniform points inside |region| by rejection sampling on its bounding box.
// Throws GenerationError after 10^6 * count rejected draws and ParameterError
// for count < 1.
std::vector<GeoPoint> generate_zones(const Region& region, int count, std::uint64_t seed);

struct ClusteringResult {
  std::vector<GeoPoint> centroids;
  std::vector<int> membership;  // original zone -> cluster
  std::vector<Zone> cluster_zones;
  std::vector<int> sizes;
  int iterations = 0;
};

// Lloyd's k-means on raw (lat, lon) degrees with k-means++ seeding. Stops when
// no membership changes or after kMaxIterations. Aggregated zones carry the
// unweighted mean frequency vector of their members.
ClusteringResult cluster_zones(std::span<const Zone> zones, int k, std::uint64_t seed);

inline constexpr int kMaxKMeansIterations = 300;

// Copy of |full| whose zones are the clusters; distances are recomputed with
// haversine_nm and S with derive_reachability. The tidal set is shared.
Instance clustered_instance(const Instance& full, const ClusteringResult& clustering);

}  // namespace rcap::geo

#endif  // RCAP_GEO_HPP_
