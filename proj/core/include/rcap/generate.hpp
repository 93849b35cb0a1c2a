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

// Seeded synthetic instances.
//
// Every random relation draws from its own stream of the seed, so changing
// one part of a profile leaves the others untouched:
//
//   stream 0  zone positions
//   stream 1  vessel-station placement C, Bernoulli(placement_p) per pair
//   stream 2  incident severities, uniform in (0, 1]
//   stream 3  zone frequencies, Bernoulli(frequency_gate_p) then uniform [0, 1)
//   stream 4  synthetic gauge series
//
// Equipment compatibility B follows from the vessel equipment tags and
// reachability S from the halved vessel ranges.

#ifndef RCAP_GENERATE_HPP_
#define RCAP_GENERATE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcap/geo.hpp"
#include "rcap/model.hpp"
#include "rcap/tides.hpp"

namespace rcap {

enum class Sea { kNorth, kBaltic };

struct GaugeSite {
  std::string id;
  GeoPoint position;
  Sea sea = Sea::kNorth;
};

// Editable fixture data: vessel types, stations, gauge sites and the sea
// region zones are sampled from.
struct Catalog {
  std::vector<VesselType> vessels;
  std::vector<Station> stations;
  std::vector<GaugeSite> gauges;
  geo::Region region{geo::BoundingBox{}};
};

// The built-in catalog of 11 vessel types and 55 coastal stations.
const Catalog& default_catalog();

// JSON object with optional keys "vessels", "stations", "gauges" and
// "region" (GeoJSON); missing keys fall back to the built-in catalog.
Catalog catalog_from_json(std::string_view text);

struct Profile {
  std::string name = "paper";
  int vessel_types = 11;
  int stations = 55;
  int zones = 1000;
  double placement_p = 0.9;
  double frequency_gate_p = 0.4;
  std::int64_t tide_start = 1700438400;  // 2023-11-20T00:00:00Z
  int tide_days = 30;
  int tide_step_s = 60;
};

// "paper" (11 x 55 x 1000, a month of minute tides), "desk" (11 x 55 x 200,
// a week), "small" (5 x 12 x 60, two days) and "tiny" (3 x 5 x 12, one day).
// Throws ParameterError for unknown names.
Profile profile_by_name(std::string_view name);
std::vector<std::string> profile_names();

// Throws ParameterError when the profile asks for more vessel types or
// stations than the catalog holds or for non-positive sizes.
void validate_profile(const Profile& profile, const Catalog& catalog);

// The first profile.vessel_types catalog vessels and profile.stations
// stations spread evenly over the catalog order.
std::vector<VesselType> profile_vessels(const Profile& profile, const Catalog& catalog);
std::vector<Station> profile_stations(const Profile& profile, const Catalog& catalog);

inline constexpr std::uint64_t kZoneStream = 0;
inline constexpr std::uint64_t kPlacementStream = 1;
inline constexpr std::uint64_t kSeverityStream = 2;
inline constexpr std::uint64_t kFrequencyStream = 3;
inline constexpr std::uint64_t kTideStream = 4;

// Firefighting, pumping, secondary craft, hospital, first aid and three
// towing classes.
std::vector<IncidentType> default_incident_types();

// Semidiurnal tide with a 12.42 h principal and a 12 h secondary component,
// a slow shared surge per sea and minute-scale noise. North Sea sites carry
// metre-scale tides with a phase that grows along the coast; Baltic sites
// are nearly tideless.
std::vector<tides::GaugeSeries> synthetic_gauges(std::span<const GaugeSite> sites,
                                                 std::int64_t start, int days, int step_s,
                                                 std::uint64_t seed);

// B from equipment tags: (i, k) in B iff vessel i carries every tag that
// incident type k requires.
void apply_equipment(Instance& instance);

struct GeneratedInstance {
  Instance instance;
  std::vector<tides::GaugeSeries> gauges;
};

// Builds a full instance. Without |gauges| the synthetic generator supplies
// the series for the catalog gauge sites. Throws ParameterError for invalid
// profiles.
GeneratedInstance generate_instance(const Profile& profile, const Catalog& catalog,
                                    std::uint64_t seed,
                                    std::optional<std::span<const tides::GaugeSeries>> gauges = {});

// Replaces the tidal set of |instance| by the states derived from |gauges|.
void apply_gauges(Instance& instance, std::span<const tides::GaugeSeries> gauges);

}  // namespace rcap

#endif  // RCAP_GENERATE_HPP_
