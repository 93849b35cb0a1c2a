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

#include "rcap/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rcap/errors.hpp"
#include "rcap/json_io.hpp"
#include "rcap/random.hpp"
#include "rcap_catalog_data.hpp"

namespace rcap {
namespace {

using Json = nlohmann::json;

constexpr double kM2PeriodH = 12.42;
constexpr double kS2PeriodH = 12.0;

Json parse(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedInputError(fmt::format("{}: {}", what, e.what()));
  }
}

template <typename T>
T get(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInputError(fmt::format("{}: missing field '{}'", where, key));
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw MalformedInputError(fmt::format("{}.{}: unexpected value", where, key));
  }
}

std::vector<VesselType> vessels_from(const Json& list) {
  if (!list.is_array()) throw MalformedInputError("catalog.vessels must be an array");
  std::vector<VesselType> out;
  for (const Json& v : list) {
    const std::string where = fmt::format("catalog.vessels[{}]", out.size() + 1);
    out.push_back({get<std::string>(v, "name", where), get<double>(v, "speed_kn", where),
                   get<double>(v, "draught_m", where), get<int>(v, "count", where),
                   get<double>(v, "range_nm", where),
                   v.contains("equipment") ? get<std::vector<std::string>>(v, "equipment", where)
                                           : std::vector<std::string>{}});
  }
  return out;
}

std::vector<Station> stations_from(const Json& list) {
  if (!list.is_array()) throw MalformedInputError("catalog.stations must be an array");
  std::vector<Station> out;
  for (const Json& s : list) {
    const std::string where = fmt::format("catalog.stations[{}]", out.size() + 1);
    out.push_back({get<std::string>(s, "name", where),
                   {get<double>(s, "lat", where), get<double>(s, "lon", where)},
                   get<double>(s, "base_depth_m", where)});
  }
  return out;
}

std::vector<GaugeSite> gauges_from(const Json& list) {
  if (!list.is_array()) throw MalformedInputError("catalog.gauges must be an array");
  std::vector<GaugeSite> out;
  for (const Json& g : list) {
    const std::string where = fmt::format("catalog.gauges[{}]", out.size() + 1);
    const std::string sea = g.contains("sea") ? get<std::string>(g, "sea", where) : "north";
    if (sea != "north" && sea != "baltic") {
      throw MalformedInputError(fmt::format("{}.sea: expected north or baltic, got '{}'", where, sea));
    }
    out.push_back({get<std::string>(g, "id", where),
                   {get<double>(g, "lat", where), get<double>(g, "lon", where)},
                   sea == "north" ? Sea::kNorth : Sea::kBaltic});
  }
  return out;
}

Catalog build_default_catalog() {
  Catalog c;
  c.vessels = vessels_from(parse(data::kVesselsJson, "built-in vessels"));
  c.stations = stations_from(parse(data::kStationsJson, "built-in stations"));
  c.gauges = gauges_from(parse(data::kGaugesJson, "built-in gauges"));
  c.region = io::region_from_geojson(data::kRegionGeoJson);
  return c;
}

// Shared AR(1) surge with stationary standard deviation |sd| and correlation
// time |tau_h|.
std::vector<double> surge(Rng& rng, std::size_t samples, int step_s, double sd, double tau_h) {
  const double rho = std::exp(-static_cast<double>(step_s) / (tau_h * 3600.0));
  const double innovation = sd * std::sqrt(1.0 - rho * rho);
  std::vector<double> out(samples);
  double x = sd * rng.normal();
  for (std::size_t t = 0; t < samples; ++t) {
    out[t] = x;
    x = rho * x + innovation * rng.normal();
  }
  return out;
}

}  // namespace

const Catalog& default_catalog() {
  static const Catalog catalog = build_default_catalog();
  return catalog;
}

Catalog catalog_from_json(std::string_view text) {
  const Json j = parse(text, "catalog");
  if (!j.is_object()) throw MalformedInputError("catalog must be a JSON object");
  Catalog c = default_catalog();
  if (j.contains("vessels")) c.vessels = vessels_from(j["vessels"]);
  if (j.contains("stations")) c.stations = stations_from(j["stations"]);
  if (j.contains("gauges")) c.gauges = gauges_from(j["gauges"]);
  if (j.contains("region")) c.region = io::region_from_geojson(j["region"].dump());
  return c;
}

Profile profile_by_name(std::string_view name) {
  Profile p;
  p.name = std::string(name);
  if (name == "paper") return p;
  if (name == "desk") {
    p.zones = 200;
    p.tide_days = 7;
    return p;
  }
  if (name == "small") {
    p.vessel_types = 5;
    p.stations = 12;
    p.zones = 60;
    p.tide_days = 2;
    return p;
  }
  if (name == "tiny") {
    p.vessel_types = 3;
    p.stations = 5;
    p.zones = 12;
    p.tide_days = 1;
    return p;
  }
  throw ParameterError(fmt::format("unknown profile '{}' (expected one of paper, desk, small, tiny)", name));
}

std::vector<std::string> profile_names() { return {"paper", "desk", "small", "tiny"}; }

void validate_profile(const Profile& p, const Catalog& c) {
  if (p.vessel_types < 1 || p.stations < 1 || p.zones < 1) {
    throw ParameterError("profile sizes must be positive");
  }
  if (p.vessel_types > static_cast<int>(c.vessels.size())) {
    throw ParameterError(fmt::format("profile asks for {} vessel types, catalog has {}", p.vessel_types,
                                     c.vessels.size()));
  }
  if (p.stations > static_cast<int>(c.stations.size())) {
    throw ParameterError(
        fmt::format("profile asks for {} stations, catalog has {}", p.stations, c.stations.size()));
  }
  if (!(p.placement_p >= 0.0 && p.placement_p <= 1.0) ||
      !(p.frequency_gate_p >= 0.0 && p.frequency_gate_p <= 1.0)) {
    throw ParameterError("profile probabilities must lie in [0, 1]");
  }
  if (p.tide_days < 1 || p.tide_step_s < 1) throw ParameterError("tide window must be positive");
  if (c.gauges.size() < 3) throw ParameterError("catalog needs at least 3 gauge sites");
}

std::vector<VesselType> profile_vessels(const Profile& p, const Catalog& c) {
  return {c.vessels.begin(), c.vessels.begin() + p.vessel_types};
}

std::vector<Station> profile_stations(const Profile& p, const Catalog& c) {
  const std::size_t total = c.stations.size();
  std::vector<Station> out;
  out.reserve(static_cast<std::size_t>(p.stations));
  for (int s = 0; s < p.stations; ++s) {
    out.push_back(c.stations[static_cast<std::size_t>(s) * total / static_cast<std::size_t>(p.stations)]);
  }
  return out;
}

std::vector<IncidentType> default_incident_types() {
  return {
      {"firefighting", 1.0, {"firefighting"}},
      {"pumping", 1.0, {"pumping"}},
      {"secondary-craft", 1.0, {"secondary-craft"}},
      {"hospital", 1.0, {"hospital"}},
      {"first-aid", 1.0, {"first-aid"}},
      {"tow-small", 1.0, {"tow-small"}},
      {"tow-medium", 1.0, {"tow-medium"}},
      {"tow-large", 1.0, {"tow-large"}},
  };
}

std::vector<tides::GaugeSeries> synthetic_gauges(std::span<const GaugeSite> sites, std::int64_t start,
                                                 int days, int step_s, std::uint64_t seed) {
  if (days < 1 || step_s < 1) throw ParameterError("tide window must be positive");
  const auto samples = static_cast<std::size_t>(days) * 86400 / static_cast<std::size_t>(step_s);
  Rng rng(seed, kTideStream);
  const std::vector<double> north = surge(rng, samples, step_s, 0.25, 30.0);
  const std::vector<double> baltic = surge(rng, samples, step_s, 0.20, 40.0);

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double w2 = kTwoPi / (kM2PeriodH * 3600.0);
  const double s2 = kTwoPi / (kS2PeriodH * 3600.0);

  std::vector<tides::GaugeSeries> out;
  out.reserve(sites.size());
  for (const GaugeSite& site : sites) {
    const bool is_north = site.sea == Sea::kNorth;
    const double amp = is_north ? rng.uniform(1.1, 1.5) : rng.uniform(0.02, 0.08);
    const double phase = is_north ? 0.5 * (site.position.lon - 6.7) + 0.6 * (site.position.lat - 53.5) +
                                        rng.uniform(-0.1, 0.1)
                                  : rng.uniform(0.0, kTwoPi);
    const double surge_scale = rng.uniform(0.8, 1.2);
    const std::vector<double> local = surge(rng, samples, step_s, 0.04, 3.0);
    const std::vector<double>& shared = is_north ? north : baltic;

    tides::GaugeSeries g{site.id, site.position, {}};
    g.samples.reserve(samples);
    for (std::size_t t = 0; t < samples; ++t) {
      const auto dt = static_cast<double>(t) * step_s;
      const double tide = amp * std::cos(w2 * dt - phase) + 0.25 * amp * std::cos(s2 * dt - phase - 0.3);
      const double level = tide + surge_scale * shared[t] + local[t] + 0.002 * rng.normal();
      g.samples.push_back({start + static_cast<std::int64_t>(t) * step_s, std::round(level * 100.0) / 100.0});
    }
    out.push_back(std::move(g));
  }
  return out;
}

void apply_equipment(Instance& instance) {
  for (int i = 0; i < instance.num_vessels(); ++i) {
    for (int k = 0; k < instance.num_incident_types(); ++k) {
      const auto& need = instance.incident_types[k].required_equipment;
      const bool ok = std::all_of(need.begin(), need.end(),
                                  [&](const std::string& tag) { return instance.vessels[i].has_equipment(tag); });
      instance.relations.set_equipped(i, k, ok);
    }
  }
}

void apply_gauges(Instance& instance, std::span<const tides::GaugeSeries> gauges) {
  const tides::StationLevels levels = tides::interpolate_station_levels(gauges, instance.stations);
  instance.tidal = tides::derive_states(levels, instance.stations, instance.vessels);
}

GeneratedInstance generate_instance(const Profile& profile, const Catalog& catalog, std::uint64_t seed,
                                    std::optional<std::span<const tides::GaugeSeries>> gauges) {
  validate_profile(profile, catalog);
  GeneratedInstance out;
  Instance& inst = out.instance;
  inst.vessels = profile_vessels(profile, catalog);
  inst.stations = profile_stations(profile, catalog);
  inst.incident_types = default_incident_types();
  const int n = inst.num_vessels();
  const int m = inst.num_stations();
  const int f = inst.num_incident_types();

  Rng severity(seed, kSeverityStream);
  for (IncidentType& k : inst.incident_types) k.severity = severity.uniform_open_closed();

  const std::vector<GeoPoint> points = geo::generate_zones(catalog.region, profile.zones, seed);
  Rng frequency(seed, kFrequencyStream);
  inst.zones.reserve(points.size());
  for (const GeoPoint& p : points) {
    Zone z{p, std::vector<double>(static_cast<std::size_t>(f), 0.0)};
    for (double& q : z.frequencies) {
      if (frequency.bernoulli(profile.frequency_gate_p)) q = frequency.uniform();
    }
    inst.zones.push_back(std::move(z));
  }
  const int z = inst.num_zones();

  inst.relations = CompatibilityRelations(n, m, f, z);
  Rng placement(seed, kPlacementStream);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) inst.relations.set_placeable(i, j, placement.bernoulli(profile.placement_p));
  }
  apply_equipment(inst);
  inst.distances = geo::distance_matrix(inst.stations, inst.zones);
  geo::apply_reachability(inst);

  if (gauges) {
    out.gauges.assign(gauges->begin(), gauges->end());
  } else {
    out.gauges = synthetic_gauges(catalog.gauges, profile.tide_start, profile.tide_days, profile.tide_step_s, seed);
  }
  apply_gauges(inst, out.gauges);
  return out;
}

}  // namespace rcap
