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

#include "rcap/dispatch.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <fmt/format.h>

#include "rcap/errors.hpp"

namespace rcap {

std::string_view to_string(VariantTag tag) {
  switch (tag) {
    case VariantTag::kBestTidal:
      return "best-tidal";
    case VariantTag::kBetterTidal:
      return "better-tidal";
    case VariantTag::kManyZones:
      return "many-zones";
  }
  return "unknown";
}

VariantTag parse_variant(std::string_view text) {
  if (text == "best-tidal") return VariantTag::kBestTidal;
  if (text == "better-tidal") return VariantTag::kBetterTidal;
  if (text == "many-zones") return VariantTag::kManyZones;
  throw ParameterError(fmt::format("unknown variant '{}'", text));
}

ModelVariant make_variant(const Instance& instance, VariantTag tag,
                          const tides::AvailabilityProfile* profile) {
  const int m = instance.num_stations();
  const int n = instance.num_vessels();
  ModelVariant v;
  v.tag = tag;
  v.stations = m;
  v.vessels = n;

  if (tag == VariantTag::kBestTidal) {
    const std::size_t u = instance.tidal.size();
    v.weights.reserve(u);
    for (const TidalState& s : instance.tidal.states) v.weights.push_back(s.probability);
    v.operable.assign(static_cast<std::size_t>(m) * n, Bitset(u));
    for (std::size_t e = 0; e < u; ++e) {
      const TidalPattern& p = instance.tidal.states[e].pattern;
      for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
          if (p.operable(j, i)) v.operable[static_cast<std::size_t>(j) * n + i].set(e);
        }
      }
    }
    return v;
  }

  if (profile == nullptr) {
    throw ConfigurationError(
        fmt::format("variant {} needs an availability profile", to_string(tag)));
  }
  // Availability of each pair on the interval axis.
  std::vector<double> gate(static_cast<std::size_t>(m) * n);
  std::vector<double> breakpoints;
  if (tag == VariantTag::kBetterTidal) {
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) gate[static_cast<std::size_t>(j) * n + i] = profile->pair(j, i);
    }
    breakpoints = gate;
  } else {
    const std::vector<double>& station = profile->station_or_throw();
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) gate[static_cast<std::size_t>(j) * n + i] = station[j];
    }
    breakpoints = station;
  }
  v.intervals = tides::interval_set(breakpoints);
  const std::size_t t_count = v.intervals.size();
  v.weights.reserve(t_count);
  for (const auto& t : v.intervals.intervals) v.weights.push_back(t.width());
  v.operable.assign(static_cast<std::size_t>(m) * n, Bitset(t_count));
  for (std::size_t p = 0; p < gate.size(); ++p) {
    for (std::size_t t = 0; t < t_count; ++t) {
      if (gate[p] >= v.intervals.intervals[t].hi) v.operable[p].set(t);
    }
  }
  return v;
}

ModelVariant make_variant(const Instance& instance, VariantTag tag) {
  if (tag == VariantTag::kBestTidal) return make_variant(instance, tag, nullptr);
  const tides::AvailabilityProfile profile = tides::availability_profile(instance.tidal, instance.vessels);
  return make_variant(instance, tag, &profile);
}

DispatchContext::DispatchContext(const Instance& instance, const ModelVariant& variant)
    : instance_(instance),
      variant_(variant),
      incidents_(instance.num_incident_types()),
      zones_(instance.num_zones()) {
  const int m = instance.num_stations();
  const int n = instance.num_vessels();
  if (variant.stations != m || variant.vessels != n) {
    throw MalformedInputError(fmt::format("variant built for {}x{} pairs, instance has {}x{}",
                                          variant.stations, variant.vessels, m, n));
  }
  const auto& rel = instance.relations;
  candidates_.resize(static_cast<std::size_t>(zones_));
  for (int r = 0; r < zones_; ++r) {
    auto& list = candidates_[r];
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        if (instance.vessels[i].count > 0 && rel.placeable(i, j) && rel.reaches(i, j, r)) {
          list.push_back({j, i, instance.distances(j, r) / instance.vessels[i].speed_kn});
        }
      }
    }
    std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
      if (a.hours != b.hours) return a.hours < b.hours;
      if (a.station != b.station) return a.station < b.station;
      return a.vessel < b.vessel;
    });
  }

  factor_.resize(static_cast<std::size_t>(incidents_) * zones_);
  coverable_ = TripleMask(incidents_, zones_, variant.scenarios());
  for (int k = 0; k < incidents_; ++k) {
    for (int r = 0; r < zones_; ++r) {
      factor_[static_cast<std::size_t>(k) * zones_ + r] =
          instance.zones[r].frequencies.at(k) * instance.incident_types[k].severity;
      Bitset& mask = coverable_.scenarios_of(k, r);
      for (const Candidate& c : candidates_[r]) {
        if (rel.equipped(c.vessel, k)) mask |= variant.operable_mask(c.station, c.vessel);
      }
    }
  }
}

// Serves |unserved| scenarios of (incident, zone) from the fastest alive
// candidates. Returns true when nothing is left unserved.
template <typename Alive, typename OnServe>
bool DispatchContext::walk(int incident, int zone, const Alive& alive, Bitset& unserved,
                           CompensatedSum& hours, const OnServe& on_serve) const {
  const auto& rel = instance_.relations;
  const std::size_t words = unserved.word_count();
  Bitset::Word* open = unserved.words();
  std::size_t remaining = unserved.count();
  if (remaining == 0) return true;
  for (const Candidate& c : candidates_[zone]) {
    if (!rel.equipped(c.vessel, incident) || !alive(c.station, c.vessel)) continue;
    const Bitset::Word* op = variant_.operable_mask(c.station, c.vessel).words();
    CompensatedSum weight;
    bool served = false;
    for (std::size_t w = 0; w < words; ++w) {
      Bitset::Word hit = op[w] & open[w];
      if (hit == 0) continue;
      served = true;
      open[w] &= ~hit;
      remaining -= static_cast<std::size_t>(std::popcount(hit));
      on_serve(c, w, hit);
      while (hit != 0) {
        weight += variant_.weights[w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(hit))];
        hit &= hit - 1;
      }
    }
    if (served) hours += c.hours * weight.value();
    if (remaining == 0) return true;
  }
  return false;
}

DispatchResult DispatchContext::dispatch(const Allocation& alloc, bool with_plan) const {
  const int m = instance_.num_stations();
  if (alloc.stations() != m) {
    throw MalformedInputError(
        fmt::format("allocation has {} slots, instance has {} stations", alloc.stations(), m));
  }
  std::vector<int> vessel_at(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    if (auto v = alloc.vessel_at(j)) {
      if (*v < 0 || *v >= instance_.num_vessels()) {
        throw MalformedInputError(fmt::format("station {} holds unknown vessel type {}", j + 1, *v + 1));
      }
      vessel_at[j] = *v;
    }
  }
  auto alive = [&](int j, int i) { return vessel_at[j] == i; };

  DispatchResult out;
  out.unserved = TripleMask(incidents_, zones_, variant_.scenarios());
  out.per_incident.assign(static_cast<std::size_t>(incidents_), 0.0);
  if (with_plan) out.plan = DispatchPlan(incidents_, zones_, variant_.scenarios());
  CompensatedSum total;
  for (int k = 0; k < incidents_; ++k) {
    CompensatedSum incident_total;
    for (int r = 0; r < zones_; ++r) {
      Bitset& open = out.unserved.scenarios_of(k, r);
      open = coverable_.scenarios_of(k, r);
      CompensatedSum hours;
      if (with_plan) {
        DispatchPlan& plan = *out.plan;
        walk(k, r, alive, open, hours, [&](const Candidate& c, std::size_t w, Bitset::Word hit) {
          while (hit != 0) {
            const int s = static_cast<int>(w * Bitset::kWordBits) + std::countr_zero(hit);
            plan.set_responder(k, r, s, c.station);
            hit &= hit - 1;
          }
        });
      } else {
        walk(k, r, alive, open, hours, [](const Candidate&, std::size_t, Bitset::Word) {});
      }
      out.unserved_count += open.count();
      incident_total += factor(k, r) * hours.value();
    }
    out.per_incident[k] = incident_total.value();
    total += incident_total;
  }
  out.covered_objective = total.value();
  if (out.unserved_count == 0) out.objective = out.covered_objective;
  return out;
}

double DispatchContext::optimistic_value(const std::vector<std::uint8_t>& alive_pairs) const {
  const int n = instance_.num_vessels();
  auto alive = [&](int j, int i) { return alive_pairs[static_cast<std::size_t>(j) * n + i] != 0; };
  Bitset open;
  CompensatedSum total;
  for (int k = 0; k < incidents_; ++k) {
    CompensatedSum incident_total;
    for (int r = 0; r < zones_; ++r) {
      open = coverable_.scenarios_of(k, r);
      CompensatedSum hours;
      if (!walk(k, r, alive, open, hours, [](const Candidate&, std::size_t, Bitset::Word) {})) {
        return std::numeric_limits<double>::infinity();
      }
      incident_total += factor(k, r) * hours.value();
    }
    total += incident_total;
  }
  return total.value();
}

double DispatchContext::allocation_value(const std::vector<int>& vessel_at) const {
  auto alive = [&](int j, int i) { return vessel_at[j] == i; };
  Bitset open;
  CompensatedSum total;
  for (int k = 0; k < incidents_; ++k) {
    CompensatedSum incident_total;
    for (int r = 0; r < zones_; ++r) {
      open = coverable_.scenarios_of(k, r);
      CompensatedSum hours;
      if (!walk(k, r, alive, open, hours, [](const Candidate&, std::size_t, Bitset::Word) {})) {
        return std::numeric_limits<double>::infinity();
      }
      incident_total += factor(k, r) * hours.value();
    }
    total += incident_total;
  }
  return total.value();
}

std::pair<std::size_t, double> DispatchContext::allocation_score(
    const std::vector<int>& vessel_at) const {
  auto alive = [&](int j, int i) { return vessel_at[j] == i; };
  Bitset open;
  std::size_t missing = 0;
  CompensatedSum total;
  for (int k = 0; k < incidents_; ++k) {
    CompensatedSum incident_total;
    for (int r = 0; r < zones_; ++r) {
      open = coverable_.scenarios_of(k, r);
      CompensatedSum hours;
      if (!walk(k, r, alive, open, hours, [](const Candidate&, std::size_t, Bitset::Word) {})) {
        missing += open.count();
      }
      incident_total += factor(k, r) * hours.value();
    }
    total += incident_total;
  }
  return {missing, total.value()};
}

DispatchResult optimal_dispatch(const Instance& instance, const ModelVariant& variant,
                                const Allocation& alloc, bool with_plan) {
  const DispatchContext context(instance, variant);
  return context.dispatch(alloc, with_plan);
}

}  // namespace rcap
