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

// Domain types of the rescue craft allocation problem.
//
// Units are fixed across the library: distances in nautical miles, speeds in
// knots, times in hours, depths and draughts in meters. Indices are 0-based
// in memory; every file format and every human-readable message uses 1-based
// indices.

#ifndef RCAP_MODEL_HPP_
#define RCAP_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcap/bitset.hpp"
#include "rcap/numeric.hpp"
#include "rcap/tidal_state.hpp"

namespace rcap {

struct GeoPoint {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct VesselType {
  std::string name;
  double speed_kn = 0.0;
  double draught_m = 0.0;
  int count = 0;
  // Maximum listed reach. Reachability uses half of it (out and back).
  double range_nm = 0.0;
  std::vector<std::string> equipment;

  bool has_equipment(std::string_view tag) const;
};

struct Station {
  std::string name;
  GeoPoint position;
  double base_depth_m = 0.0;  // depth at zero tide reference
};

struct Zone {
  GeoPoint position;
  // Incident frequency per incident type, each in [0, 1].
  std::vector<double> frequencies;
};

struct IncidentType {
  std::string name;
  double severity = 1.0;  // strictly positive
  std::vector<std::string> required_equipment;
};

// The relations C (vessel-station placement), B (vessel-incident equipment)
// and S (vessel-station-zone reach). Memberships are independent; S is not
// required to be a subset of C x zones.
class CompatibilityRelations {
 public:
  CompatibilityRelations() = default;
  CompatibilityRelations(int vessels, int stations, int incident_types, int zones);

  int vessels() const { return vessels_; }
  int stations() const { return stations_; }
  int incident_types() const { return incident_types_; }
  int zones() const { return zones_; }

  bool placeable(int vessel, int station) const {
    return placement_[static_cast<std::size_t>(vessel) * stations_ + station] != 0;
  }
  bool equipped(int vessel, int incident) const {
    return equipment_[static_cast<std::size_t>(vessel) * incident_types_ + incident] != 0;
  }
  bool reaches(int vessel, int station, int zone) const {
    return reach_[reach_offset(vessel, station, zone)] != 0;
  }

  // Mutators throw MalformedInputError on out-of-range indices.
  void set_placeable(int vessel, int station, bool value = true);
  void set_equipped(int vessel, int incident, bool value = true);
  void set_reaches(int vessel, int station, int zone, bool value = true);

  std::size_t placement_count() const;
  std::size_t equipment_count() const;
  std::size_t reach_count() const;

  friend bool operator==(const CompatibilityRelations&, const CompatibilityRelations&) = default;

 private:
  std::size_t reach_offset(int vessel, int station, int zone) const {
    return (static_cast<std::size_t>(vessel) * stations_ + station) * zones_ + zone;
  }

  int vessels_ = 0;
  int stations_ = 0;
  int incident_types_ = 0;
  int zones_ = 0;
  std::vector<std::uint8_t> placement_;
  std::vector<std::uint8_t> equipment_;
  std::vector<std::uint8_t> reach_;
};

struct Instance {
  std::vector<VesselType> vessels;
  std::vector<Station> stations;
  std::vector<Zone> zones;
  std::vector<IncidentType> incident_types;
  CompatibilityRelations relations;
  Matrix<double> distances;  // stations x zones, nautical miles
  TidalStateSet tidal;

  int num_vessels() const { return static_cast<int>(vessels.size()); }
  int num_stations() const { return static_cast<int>(stations.size()); }
  int num_zones() const { return static_cast<int>(zones.size()); }
  int num_incident_types() const { return static_cast<int>(incident_types.size()); }
  int total_fleet() const;
};

// Partial map station -> vessel type. Empty stations have no entry.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(int stations) : slots_(static_cast<std::size_t>(stations)) {}

  int stations() const { return static_cast<int>(slots_.size()); }
  std::optional<int> vessel_at(int station) const { return slots_.at(static_cast<std::size_t>(station)); }
  bool is_assigned(int station) const { return vessel_at(station).has_value(); }

  void assign(int station, int vessel) { slots_.at(static_cast<std::size_t>(station)) = vessel; }
  void clear(int station) { slots_.at(static_cast<std::size_t>(station)).reset(); }

  int assigned_count() const;
  int count_of(int vessel) const;
  // (station, vessel) pairs in station order.
  std::vector<std::pair<int, int>> assignments() const;
  // 0 for an empty station, vessel + 1 otherwise; used for lexicographic
  // tie-breaking between allocations of equal objective.
  std::vector<int> encoded() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::optional<int>> slots_;
};

// Responder station per (incident type, zone, scenario).
class DispatchPlan {
 public:
  DispatchPlan() = default;
  DispatchPlan(int incident_types, int zones, int scenarios);

  int incident_types() const { return incident_types_; }
  int zones() const { return zones_; }
  int scenarios() const { return scenarios_; }

  std::optional<int> responder(int incident, int zone, int scenario) const;
  void set_responder(int incident, int zone, int scenario, int station);
  void clear_responder(int incident, int zone, int scenario);
  std::size_t defined_count() const;

  friend bool operator==(const DispatchPlan&, const DispatchPlan&) = default;

 private:
  std::size_t offset(int incident, int zone, int scenario) const;

  int incident_types_ = 0;
  int zones_ = 0;
  int scenarios_ = 0;
  std::vector<std::int32_t> responder_;  // -1 when undefined
};

struct Triple {
  int incident = 0;
  int zone = 0;
  int scenario = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Dense set of (incident, zone, scenario) triples.
class TripleMask {
 public:
  TripleMask() = default;
  TripleMask(int incident_types, int zones, int scenarios);

  int incident_types() const { return incident_types_; }
  int zones() const { return zones_; }
  int scenarios() const { return scenarios_; }

  bool contains(int incident, int zone, int scenario) const;
  void insert(int incident, int zone, int scenario);
  // Scenario mask of one (incident, zone) pair.
  const Bitset& scenarios_of(int incident, int zone) const;
  Bitset& scenarios_of(int incident, int zone);

  std::size_t count() const;
  std::size_t capacity() const;
  std::vector<Triple> to_vector() const;
  std::vector<Triple> complement() const;

 private:
  int incident_types_ = 0;
  int zones_ = 0;
  int scenarios_ = 0;
  std::vector<Bitset> masks_;
};

struct Violation {
  std::string field;       // e.g. "distances", "tidal", "vessels"
  std::vector<int> index;  // 1-based, may be empty
  std::string rule;
  std::string message;
};

// Returns every broken Instance invariant. An empty result means the instance
// is consistent.
std::vector<Violation> validate_instance(const Instance& instance);

// Conditions that are legal but worth surfacing, such as a fleet smaller than
// the number of stations.
std::vector<std::string> instance_warnings(const Instance& instance);

// Allocation invariants: placement in C, fleet bounds, station count match.
std::vector<Violation> validate_allocation(const Instance& instance, const Allocation& alloc);

enum class DispatchCheck {
  kNoResponder,   // triple has no responder
  kStationEmpty,  // responder station holds no vessel
  kEquipment,     // (i, k) not in B
  kReach,         // (i, j, r) not in S
  kOperability,   // (j, i) not in the tidal state
};

std::string_view to_string(DispatchCheck check);

struct TripleViolation {
  Triple triple;
  DispatchCheck check;
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::vector<TripleViolation> violations;
};

// Verifies a dispatch plan over the instance's own tidal states in
// O(m + f z |U|). Throws MalformedInputError if the plan or allocation do not
// match the instance dimensions or reference missing stations.
FeasibilityVerdict check_dispatch_feasibility(const Instance& instance, const Allocation& alloc,
                                              const DispatchPlan& plan);

// Triples for which at least one (vessel, station) pair could respond under
// some allocation.
TripleMask coverable_triples(const Instance& instance);

}  // namespace rcap

#endif  // RCAP_MODEL_HPP_
