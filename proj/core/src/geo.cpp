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

#include "rcap/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "rcap/errors.hpp"
#include "rcap/random.hpp"

namespace rcap::geo {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool ring_contains(const std::vector<GeoPoint>& ring, const GeoPoint& p) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t a = 0, b = n - 1; a < n; b = a++) {
    const GeoPoint& u = ring[a];
    const GeoPoint& v = ring[b];
    if ((u.lat > p.lat) != (v.lat > p.lat)) {
      const double lon = u.lon + (p.lat - u.lat) * (v.lon - u.lon) / (v.lat - u.lat);
      if (p.lon < lon) inside = !inside;
    }
  }
  return inside;
}

double squared(const GeoPoint& a, const GeoPoint& b) {
  const double dlat = a.lat - b.lat;
  const double dlon = a.lon - b.lon;
  return dlat * dlat + dlon * dlon;
}

}  // namespace

double haversine_nm(const GeoPoint& a, const GeoPoint& b) {
  const double s_lat = std::sin((b.lat - a.lat) * kDegToRad / 2.0);
  const double s_lon = std::sin((b.lon - a.lon) * kDegToRad / 2.0);
  const double h = s_lat * s_lat +
                   std::cos(a.lat * kDegToRad) * std::cos(b.lat * kDegToRad) * s_lon * s_lon;
  const double c = 2.0 * std::asin(std::min(1.0, std::sqrt(h)));
  return kEarthRadiusKm * c / kKmPerNauticalMile;
}

Matrix<double> distance_matrix(std::span<const Station> stations, std::span<const Zone> zones) {
  Matrix<double> d(stations.size(), zones.size());
  for (std::size_t j = 0; j < stations.size(); ++j) {
    for (std::size_t r = 0; r < zones.size(); ++r) {
      d(j, r) = haversine_nm(stations[j].position, zones[r].position);
    }
  }
  return d;
}

std::vector<ReachTriple> derive_reachability(std::span<const VesselType> vessels,
                                             const Matrix<double>& distances) {
  std::vector<ReachTriple> out;
  for (std::size_t i = 0; i < vessels.size(); ++i) {
    const double reach = vessels[i].range_nm / 2.0;
    for (std::size_t j = 0; j < distances.rows(); ++j) {
      for (std::size_t r = 0; r < distances.cols(); ++r) {
        if (distances(j, r) <= reach) {
          out.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(r)});
        }
      }
    }
  }
  return out;
}

void apply_reachability(Instance& instance) {
  const int n = instance.num_vessels();
  const int m = instance.num_stations();
  const int z = instance.num_zones();
  CompatibilityRelations next(n, m, instance.num_incident_types(), z);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (instance.relations.placeable(i, j)) next.set_placeable(i, j);
    }
    for (int k = 0; k < instance.num_incident_types(); ++k) {
      if (instance.relations.equipped(i, k)) next.set_equipped(i, k);
    }
  }
  for (const ReachTriple& t : derive_reachability(instance.vessels, instance.distances)) {
    next.set_reaches(t.vessel, t.station, t.zone);
  }
  instance.relations = std::move(next);
}

Region::Region(std::vector<Polygon> polygons) : shape_(std::move(polygons)) {
  const auto& polys = std::get<std::vector<Polygon>>(shape_);
  if (polys.empty()) throw MalformedInputError("region has no polygons");
  for (const Polygon& p : polys) {
    if (p.outer.size() < 3) throw MalformedInputError("polygon ring needs at least 3 vertices");
  }
}

const std::vector<Polygon>& Region::polygons() const {
  static const std::vector<Polygon> kNone;
  if (const auto* polys = std::get_if<std::vector<Polygon>>(&shape_)) return *polys;
  return kNone;
}

BoundingBox Region::bounding_box() const {
  if (const auto* box = std::get_if<BoundingBox>(&shape_)) return *box;
  BoundingBox box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Polygon& p : polygons()) {
    for (const GeoPoint& v : p.outer) {
      box.lat_min = std::min(box.lat_min, v.lat);
      box.lat_max = std::max(box.lat_max, v.lat);
      box.lon_min = std::min(box.lon_min, v.lon);
      box.lon_max = std::max(box.lon_max, v.lon);
    }
  }
  return box;
}

bool Region::contains(const GeoPoint& p) const {
  if (const auto* box = std::get_if<BoundingBox>(&shape_)) {
    return p.lat >= box->lat_min && p.lat <= box->lat_max && p.lon >= box->lon_min &&
           p.lon <= box->lon_max;
  }
  for (const Polygon& poly : polygons()) {
    if (!ring_contains(poly.outer, p)) continue;
    bool in_hole = false;
    for (const auto& hole : poly.holes) in_hole = in_hole || ring_contains(hole, p);
    if (!in_hole) return true;
  }
  return false;
}

std::vector<GeoPoint> generate_zones(const Region& region, int count, std::uint64_t seed) {
  if (count < 1) throw ParameterError(fmt::format("zone count must be >= 1, got {}", count));
  const BoundingBox box = region.bounding_box();
  if (!(box.lat_min <= box.lat_max && box.lon_min <= box.lon_max)) {
    throw GenerationError("region has an empty bounding box");
  }
  Rng rng(seed);
  std::vector<GeoPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::uint64_t budget = 1'000'000ULL * static_cast<std::uint64_t>(count);
  std::uint64_t attempts = 0;
  while (out.size() < static_cast<std::size_t>(count)) {
    if (attempts++ >= budget) {
      throw GenerationError(
          fmt::format("rejection sampling placed {} of {} zones in {} draws", out.size(), count,
                      budget));
    }
    const GeoPoint p{rng.uniform(box.lat_min, box.lat_max), rng.uniform(box.lon_min, box.lon_max)};
    if (region.contains(p)) out.push_back(p);
  }
  return out;
}

ClusteringResult cluster_zones(std::span<const Zone> zones, int k, std::uint64_t seed) {
  const int z = static_cast<int>(zones.size());
  if (k < 1) throw ParameterError(fmt::format("cluster count must be >= 1, got {}", k));
  if (k > z) throw ParameterError(fmt::format("cluster count {} exceeds zone count {}", k, z));

  ClusteringResult out;
  if (k == z) {
    for (int r = 0; r < z; ++r) {
      out.centroids.push_back(zones[r].position);
      out.membership.push_back(r);
      out.cluster_zones.push_back(zones[r]);
      out.sizes.push_back(1);
    }
    return out;
  }

  // k-means++ seeding.
  Rng rng(seed);
  std::vector<GeoPoint> centers;
  centers.push_back(zones[rng.index(static_cast<std::uint64_t>(z))].position);
  std::vector<double> nearest(static_cast<std::size_t>(z), std::numeric_limits<double>::infinity());
  while (static_cast<int>(centers.size()) < k) {
    double total = 0.0;
    for (int r = 0; r < z; ++r) {
      nearest[r] = std::min(nearest[r], squared(zones[r].position, centers.back()));
      total += nearest[r];
    }
    int pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      pick = z - 1;
      for (int r = 0; r < z; ++r) {
        target -= nearest[r];
        if (target < 0.0) {
          pick = r;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.index(static_cast<std::uint64_t>(z)));
    }
    centers.push_back(zones[pick].position);
  }

  std::vector<int> member(static_cast<std::size_t>(z), -1);
  std::vector<int> sizes(static_cast<std::size_t>(k));
  auto assign = [&]() {
    bool changed = false;
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int r = 0; r < z; ++r) {
      int best = 0;
      double best_d = squared(zones[r].position, centers[0]);
      for (int c = 1; c < k; ++c) {
        const double d = squared(zones[r].position, centers[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      changed = changed || member[r] != best;
      member[r] = best;
      ++sizes[best];
    }
    return changed;
  };
  auto recenter = [&]() {
    std::vector<double> lat(static_cast<std::size_t>(k)), lon(static_cast<std::size_t>(k));
    for (int r = 0; r < z; ++r) {
      lat[member[r]] += zones[r].position.lat;
      lon[member[r]] += zones[r].position.lon;
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) centers[c] = {lat[c] / sizes[c], lon[c] / sizes[c]};
    }
  };
  // Empty clusters take the point farthest from its own centroid.
  auto reseed_empty = [&]() {
    bool reseeded = false;
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int r = 0; r < z; ++r) {
        if (sizes[member[r]] <= 1) continue;
        const double d = squared(zones[r].position, centers[member[r]]);
        if (d > far_d) {
          far_d = d;
          far = r;
        }
      }
      if (far < 0) break;
      --sizes[member[far]];
      member[far] = c;
      sizes[c] = 1;
      centers[c] = zones[far].position;
      reseeded = true;
    }
    return reseeded;
  };

  int iterations = 0;
  bool changed = assign();
  while (iterations < kMaxKMeansIterations) {
    ++iterations;
    if (reseed_empty()) changed = true;
    if (!changed) break;
    recenter();
    changed = assign();
  }
  reseed_empty();
  recenter();

  const int f = z > 0 ? static_cast<int>(zones[0].frequencies.size()) : 0;
  out.centroids = centers;
  out.membership = member;
  out.sizes = sizes;
  out.iterations = iterations;
  out.cluster_zones.assign(static_cast<std::size_t>(k), Zone{});
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(k),
                                        std::vector<double>(static_cast<std::size_t>(f)));
  for (int r = 0; r < z; ++r) {
    for (int q = 0; q < f; ++q) sums[member[r]][q] += zones[r].frequencies.at(q);
  }
  for (int c = 0; c < k; ++c) {
    out.cluster_zones[c].position = centers[c];
    out.cluster_zones[c].frequencies.resize(static_cast<std::size_t>(f));
    for (int q = 0; q < f; ++q) {
      out.cluster_zones[c].frequencies[q] = std::clamp(sums[c][q] / sizes[c], 0.0, 1.0);
    }
  }
  return out;
}

Instance clustered_instance(const Instance& full, const ClusteringResult& clustering) {
  Instance out;
  out.vessels = full.vessels;
  out.stations = full.stations;
  out.incident_types = full.incident_types;
  out.tidal = full.tidal;
  out.zones = clustering.cluster_zones;
  out.distances = distance_matrix(out.stations, out.zones);
  out.relations = full.relations;
  apply_reachability(out);
  return out;
}

}  // namespace rcap::geo
