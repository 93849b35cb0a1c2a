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

#include "rcap/model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "rcap/errors.hpp"

namespace rcap {

bool VesselType::has_equipment(std::string_view tag) const {
  return std::find(equipment.begin(), equipment.end(), tag) != equipment.end();
}

CompatibilityRelations::CompatibilityRelations(int vessels, int stations, int incident_types,
                                               int zones)
    : vessels_(vessels), stations_(stations), incident_types_(incident_types), zones_(zones) {
  if (vessels < 0 || stations < 0 || incident_types < 0 || zones < 0) {
    throw MalformedInputError("relation dimensions must be non-negative");
  }
  placement_.assign(static_cast<std::size_t>(vessels) * stations, 0);
  equipment_.assign(static_cast<std::size_t>(vessels) * incident_types, 0);
  reach_.assign(static_cast<std::size_t>(vessels) * stations * zones, 0);
}

namespace {

void check_index(int value, int bound, std::string_view what) {
  if (value < 0 || value >= bound) {
    throw MalformedInputError(
        fmt::format("{} index {} out of range [1, {}]", what, value + 1, bound));
  }
}

std::size_t count_nonzero(const std::vector<std::uint8_t>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto b) { return b != 0; }));
}

}  // namespace

void CompatibilityRelations::set_placeable(int vessel, int station, bool value) {
  check_index(vessel, vessels_, "vessel");
  check_index(station, stations_, "station");
  placement_[static_cast<std::size_t>(vessel) * stations_ + station] = value ? 1 : 0;
}

void CompatibilityRelations::set_equipped(int vessel, int incident, bool value) {
  check_index(vessel, vessels_, "vessel");
  check_index(incident, incident_types_, "incident type");
  equipment_[static_cast<std::size_t>(vessel) * incident_types_ + incident] = value ? 1 : 0;
}

void CompatibilityRelations::set_reaches(int vessel, int station, int zone, bool value) {
  check_index(vessel, vessels_, "vessel");
  check_index(station, stations_, "station");
  check_index(zone, zones_, "zone");
  reach_[reach_offset(vessel, station, zone)] = value ? 1 : 0;
}

std::size_t CompatibilityRelations::placement_count() const { return count_nonzero(placement_); }
std::size_t CompatibilityRelations::equipment_count() const { return count_nonzero(equipment_); }
std::size_t CompatibilityRelations::reach_count() const { return count_nonzero(reach_); }

int Instance::total_fleet() const {
  int total = 0;
  for (const auto& v : vessels) total += v.count;
  return total;
}

int Allocation::assigned_count() const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(),
                                        [](const auto& s) { return s.has_value(); }));
}

int Allocation::count_of(int vessel) const {
  return static_cast<int>(std::count(slots_.begin(), slots_.end(), std::optional<int>(vessel)));
}

std::vector<std::pair<int, int>> Allocation::assignments() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (slots_[j]) out.emplace_back(static_cast<int>(j), *slots_[j]);
  }
  return out;
}

std::vector<int> Allocation::encoded() const {
  std::vector<int> out(slots_.size(), 0);
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (slots_[j]) out[j] = *slots_[j] + 1;
  }
  return out;
}

DispatchPlan::DispatchPlan(int incident_types, int zones, int scenarios)
    : incident_types_(incident_types),
      zones_(zones),
      scenarios_(scenarios),
      responder_(static_cast<std::size_t>(incident_types) * zones * scenarios, -1) {}

std::size_t DispatchPlan::offset(int incident, int zone, int scenario) const {
  if (incident < 0 || incident >= incident_types_ || zone < 0 || zone >= zones_ || scenario < 0 ||
      scenario >= scenarios_) {
    throw MalformedInputError(fmt::format("dispatch triple ({}, {}, {}) out of range",
                                          incident + 1, zone + 1, scenario + 1));
  }
  return (static_cast<std::size_t>(incident) * zones_ + zone) * scenarios_ + scenario;
}

std::optional<int> DispatchPlan::responder(int incident, int zone, int scenario) const {
  const auto v = responder_[offset(incident, zone, scenario)];
  if (v < 0) return std::nullopt;
  return v;
}

void DispatchPlan::set_responder(int incident, int zone, int scenario, int station) {
  responder_[offset(incident, zone, scenario)] = station;
}

void DispatchPlan::clear_responder(int incident, int zone, int scenario) {
  responder_[offset(incident, zone, scenario)] = -1;
}

std::size_t DispatchPlan::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(responder_.begin(), responder_.end(), [](auto v) { return v >= 0; }));
}

TripleMask::TripleMask(int incident_types, int zones, int scenarios)
    : incident_types_(incident_types),
      zones_(zones),
      scenarios_(scenarios),
      masks_(static_cast<std::size_t>(incident_types) * zones,
             Bitset(static_cast<std::size_t>(scenarios))) {}

bool TripleMask::contains(int incident, int zone, int scenario) const {
  return scenarios_of(incident, zone).test(static_cast<std::size_t>(scenario));
}

void TripleMask::insert(int incident, int zone, int scenario) {
  scenarios_of(incident, zone).set(static_cast<std::size_t>(scenario));
}

const Bitset& TripleMask::scenarios_of(int incident, int zone) const {
  return masks_[static_cast<std::size_t>(incident) * zones_ + zone];
}

Bitset& TripleMask::scenarios_of(int incident, int zone) {
  return masks_[static_cast<std::size_t>(incident) * zones_ + zone];
}

std::size_t TripleMask::count() const {
  std::size_t n = 0;
  for (const auto& m : masks_) n += m.count();
  return n;
}

std::size_t TripleMask::capacity() const {
  return static_cast<std::size_t>(incident_types_) * zones_ * scenarios_;
}

std::vector<Triple> TripleMask::to_vector() const {
  std::vector<Triple> out;
  for (int k = 0; k < incident_types_; ++k) {
    for (int r = 0; r < zones_; ++r) {
      scenarios_of(k, r).for_each_set(
          [&](std::size_t s) { out.push_back({k, r, static_cast<int>(s)}); });
    }
  }
  return out;
}

std::vector<Triple> TripleMask::complement() const {
  std::vector<Triple> out;
  for (int k = 0; k < incident_types_; ++k) {
    for (int r = 0; r < zones_; ++r) {
      const auto& m = scenarios_of(k, r);
      for (int s = 0; s < scenarios_; ++s) {
        if (!m.test(static_cast<std::size_t>(s))) out.push_back({k, r, s});
      }
    }
  }
  return out;
}

namespace {

class ViolationSink {
 public:
  void add(std::string field, std::vector<int> index, std::string rule, std::string message) {
    out_.push_back({std::move(field), std::move(index), std::move(rule), std::move(message)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

bool in_range(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 && p.lat <= 90.0 &&
         p.lon >= -180.0 && p.lon <= 180.0;
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& instance) {
  ViolationSink sink;
  const int n = instance.num_vessels();
  const int m = instance.num_stations();
  const int z = instance.num_zones();
  const int f = instance.num_incident_types();

  for (int i = 0; i < n; ++i) {
    const auto& v = instance.vessels[static_cast<std::size_t>(i)];
    if (!(v.speed_kn > 0.0) || !std::isfinite(v.speed_kn)) {
      sink.add("vessels", {i + 1}, "speed > 0", fmt::format("vessel {} speed {} must be > 0", i + 1, v.speed_kn));
    }
    if (!(v.draught_m > 0.0) || !std::isfinite(v.draught_m)) {
      sink.add("vessels", {i + 1}, "draught > 0",
               fmt::format("vessel {} draught {} must be > 0", i + 1, v.draught_m));
    }
    if (!(v.range_nm > 0.0)) {
      sink.add("vessels", {i + 1}, "range > 0", fmt::format("vessel {} range {} must be > 0", i + 1, v.range_nm));
    }
    if (v.count < 0) {
      sink.add("vessels", {i + 1}, "count >= 0", fmt::format("vessel {} count {} must be >= 0", i + 1, v.count));
    }
  }

  for (int j = 0; j < m; ++j) {
    const auto& s = instance.stations[static_cast<std::size_t>(j)];
    if (!in_range(s.position)) {
      sink.add("stations", {j + 1}, "position in range",
               fmt::format("station {} position ({}, {}) out of range", j + 1, s.position.lat, s.position.lon));
    }
    if (!std::isfinite(s.base_depth_m)) {
      sink.add("stations", {j + 1}, "base_depth finite", fmt::format("station {} base depth not finite", j + 1));
    }
  }

  for (int r = 0; r < z; ++r) {
    const auto& zone = instance.zones[static_cast<std::size_t>(r)];
    if (!in_range(zone.position)) {
      sink.add("zones", {r + 1}, "position in range", fmt::format("zone {} position out of range", r + 1));
    }
    if (static_cast<int>(zone.frequencies.size()) != f) {
      sink.add("zones", {r + 1}, "frequencies length = incident types",
               fmt::format("zone {} has {} frequencies, expected {}", r + 1, zone.frequencies.size(), f));
      continue;
    }
    for (int k = 0; k < f; ++k) {
      const double q = zone.frequencies[static_cast<std::size_t>(k)];
      if (!(q >= 0.0 && q <= 1.0)) {
        sink.add("zones", {r + 1, k + 1}, "frequency in [0,1]",
                 fmt::format("zone {} frequency for incident type {} is {}", r + 1, k + 1, q));
      }
    }
  }

  for (int k = 0; k < f; ++k) {
    const double s = instance.incident_types[static_cast<std::size_t>(k)].severity;
    if (!(s > 0.0) || !std::isfinite(s)) {
      sink.add("incident_types", {k + 1}, "severity > 0",
               fmt::format("incident type {} severity {} must be > 0", k + 1, s));
    }
  }

  const auto& rel = instance.relations;
  if (rel.vessels() != n || rel.stations() != m || rel.incident_types() != f || rel.zones() != z) {
    sink.add("compat", {}, "relation dimensions match instance",
             fmt::format("relations sized {}x{}x{}x{}, instance is {}x{}x{}x{}", rel.vessels(), rel.stations(),
                         rel.incident_types(), rel.zones(), n, m, f, z));
  }

  if (instance.distances.rows() != static_cast<std::size_t>(m) ||
      instance.distances.cols() != static_cast<std::size_t>(z)) {
    sink.add("distances", {}, "shape m x z",
             fmt::format("distances shape {}x{}, expected {}x{}", instance.distances.rows(),
                         instance.distances.cols(), m, z));
  } else {
    for (int j = 0; j < m; ++j) {
      for (int r = 0; r < z; ++r) {
        const double d = instance.distances(static_cast<std::size_t>(j), static_cast<std::size_t>(r));
        if (!(d >= 0.0) || !std::isfinite(d)) {
          sink.add("distances", {j + 1, r + 1}, "distance >= 0",
                   fmt::format("distances[{}][{}] = {} must be finite and >= 0", j + 1, r + 1, d));
        }
      }
    }
  }

  const auto& tidal = instance.tidal;
  if (tidal.states.empty()) {
    sink.add("tidal", {}, "non-empty uncertainty set", "tidal state set is empty");
  }
  CompensatedSum total;
  std::unordered_set<TidalPattern> seen;
  for (std::size_t e = 0; e < tidal.states.size(); ++e) {
    const auto& state = tidal.states[e];
    const int idx = static_cast<int>(e) + 1;
    if (state.pattern.stations() != m || state.pattern.vessels() != n) {
      sink.add("tidal", {idx}, "pattern dimensions m x n",
               fmt::format("tidal state {} pattern sized {}x{}, expected {}x{}", idx, state.pattern.stations(),
                           state.pattern.vessels(), m, n));
    }
    if (!(state.probability > 0.0 && state.probability <= 1.0)) {
      sink.add("tidal", {idx}, "probability in (0,1]",
               fmt::format("tidal state {} probability {} outside (0, 1]", idx, state.probability));
    }
    if (!seen.insert(state.pattern).second) {
      sink.add("tidal", {idx}, "patterns distinct", fmt::format("tidal state {} duplicates an earlier pattern", idx));
    }
    total += state.probability;
  }
  if (!tidal.states.empty() && std::abs(total.value() - 1.0) > kTolerance) {
    sink.add("tidal", {}, "probabilities sum to 1",
             fmt::format("tidal probabilities sum {:g} != 1", total.value()));
  }
  if (tidal.total_samples > 0) {
    std::uint64_t occ = 0;
    for (const auto& s : tidal.states) occ += s.occurrences;
    if (occ != tidal.total_samples) {
      sink.add("tidal", {}, "occurrences sum to sample count",
               fmt::format("tidal occurrences sum {} != {} samples", occ, tidal.total_samples));
    }
  }

  return sink.take();
}

std::vector<std::string> instance_warnings(const Instance& instance) {
  std::vector<std::string> out;
  if (instance.total_fleet() < instance.num_stations()) {
    out.push_back(fmt::format("fleet of {} vessels cannot occupy all {} stations; full coverage may be infeasible",
                              instance.total_fleet(), instance.num_stations()));
  }
  return out;
}

std::vector<Violation> validate_allocation(const Instance& instance, const Allocation& alloc) {
  ViolationSink sink;
  if (alloc.stations() != instance.num_stations()) {
    sink.add("allocation", {}, "one slot per station",
             fmt::format("allocation has {} slots, instance has {} stations", alloc.stations(),
                         instance.num_stations()));
    return sink.take();
  }
  std::vector<int> used(static_cast<std::size_t>(instance.num_vessels()), 0);
  for (auto [j, i] : alloc.assignments()) {
    if (i < 0 || i >= instance.num_vessels()) {
      sink.add("allocation", {j + 1}, "vessel index in range",
               fmt::format("station {} holds unknown vessel type {}", j + 1, i + 1));
      continue;
    }
    ++used[static_cast<std::size_t>(i)];
    if (!instance.relations.placeable(i, j)) {
      sink.add("allocation", {j + 1, i + 1}, "placement in C",
               fmt::format("vessel type {} cannot be placed at station {}", i + 1, j + 1));
    }
  }
  for (int i = 0; i < instance.num_vessels(); ++i) {
    const int cap = instance.vessels[static_cast<std::size_t>(i)].count;
    if (used[static_cast<std::size_t>(i)] > cap) {
      sink.add("allocation", {i + 1}, "fleet bound",
               fmt::format("vessel type {} assigned {} times, fleet has {}", i + 1, used[static_cast<std::size_t>(i)], cap));
    }
  }
  return sink.take();
}

std::string_view to_string(DispatchCheck check) {
  switch (check) {
    case DispatchCheck::kNoResponder:
      return "no-responder";
    case DispatchCheck::kStationEmpty:
      return "station-empty";
    case DispatchCheck::kEquipment:
      return "equipment";
    case DispatchCheck::kReach:
      return "reach";
    case DispatchCheck::kOperability:
      return "operability";
  }
  return "unknown";
}

FeasibilityVerdict check_dispatch_feasibility(const Instance& instance, const Allocation& alloc,
                                              const DispatchPlan& plan) {
  const int m = instance.num_stations();
  const int f = instance.num_incident_types();
  const int z = instance.num_zones();
  const int u = static_cast<int>(instance.tidal.size());
  if (alloc.stations() != m) {
    throw MalformedInputError(fmt::format("allocation has {} slots, instance has {} stations", alloc.stations(), m));
  }
  if (plan.incident_types() != f || plan.zones() != z || plan.scenarios() != u) {
    throw MalformedInputError(fmt::format("dispatch plan sized {}x{}x{}, instance needs {}x{}x{}",
                                          plan.incident_types(), plan.zones(), plan.scenarios(), f, z, u));
  }
  // O(m): the allocated vessel of every station.
  std::vector<int> vessel_at(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    if (auto v = alloc.vessel_at(j)) {
      if (*v < 0 || *v >= instance.num_vessels()) {
        throw MalformedInputError(fmt::format("station {} holds unknown vessel type {}", j + 1, *v + 1));
      }
      vessel_at[static_cast<std::size_t>(j)] = *v;
    }
  }

  FeasibilityVerdict verdict;
  const auto& rel = instance.relations;
  for (int k = 0; k < f; ++k) {
    for (int r = 0; r < z; ++r) {
      for (int e = 0; e < u; ++e) {
        const auto station = plan.responder(k, r, e);
        const Triple t{k, r, e};
        if (!station) {
          verdict.violations.push_back({t, DispatchCheck::kNoResponder});
          continue;
        }
        const int j = *station;
        if (j < 0 || j >= m) {
          throw MalformedInputError(fmt::format("plan references station {} of {}", j + 1, m));
        }
        const int i = vessel_at[static_cast<std::size_t>(j)];
        if (i < 0) {
          verdict.violations.push_back({t, DispatchCheck::kStationEmpty});
          continue;
        }
        if (!rel.equipped(i, k)) verdict.violations.push_back({t, DispatchCheck::kEquipment});
        if (!rel.reaches(i, j, r)) verdict.violations.push_back({t, DispatchCheck::kReach});
        if (!instance.tidal.states[static_cast<std::size_t>(e)].pattern.operable(j, i)) {
          verdict.violations.push_back({t, DispatchCheck::kOperability});
        }
      }
    }
  }
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

TripleMask coverable_triples(const Instance& instance) {
  const int n = instance.num_vessels();
  const int m = instance.num_stations();
  const int f = instance.num_incident_types();
  const int z = instance.num_zones();
  const int u = static_cast<int>(instance.tidal.size());
  const auto& rel = instance.relations;

  // Operable states per (station, vessel) pair.
  std::vector<Bitset> operable(static_cast<std::size_t>(m) * n, Bitset(static_cast<std::size_t>(u)));
  for (int e = 0; e < u; ++e) {
    const auto& p = instance.tidal.states[static_cast<std::size_t>(e)].pattern;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        if (p.operable(j, i)) operable[static_cast<std::size_t>(j) * n + i].set(static_cast<std::size_t>(e));
      }
    }
  }

  TripleMask mask(f, z, u);
  for (int k = 0; k < f; ++k) {
    for (int r = 0; r < z; ++r) {
      auto& out = mask.scenarios_of(k, r);
      for (int i = 0; i < n; ++i) {
        if (!rel.equipped(i, k) || instance.vessels[i].count <= 0) continue;
        for (int j = 0; j < m; ++j) {
          if (rel.placeable(i, j) && rel.reaches(i, j, r)) out |= operable[static_cast<std::size_t>(j) * n + i];
        }
      }
    }
  }
  return mask;
}

}  // namespace rcap
