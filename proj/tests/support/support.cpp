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

#include "support/support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "rcap/random.hpp"

namespace rcap::testing {
namespace {

constexpr double kPi = 3.14159265358979323846;

int draw_between(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.index(hi - lo + 1)); }

Instance skeleton(Rng& rng, int m, int n, int z, int f) {
  Instance inst;
  for (int i = 0; i < n; ++i) {
    VesselType v;
    v.name = "v" + std::to_string(i + 1);
    v.speed_kn = std::round(rng.uniform(5.0, 30.0) * 2.0) / 2.0;
    v.draught_m = rng.uniform(0.5, 3.0);
    v.count = rng.bernoulli(0.1) ? 0 : draw_between(rng, 1, 2);
    v.range_nm = 1000.0;
    inst.vessels.push_back(v);
  }
  for (int j = 0; j < m; ++j) {
    Station s;
    s.name = "s" + std::to_string(j + 1);
    s.position = {rng.uniform(53.0, 55.0), rng.uniform(6.0, 14.0)};
    s.base_depth_m = rng.uniform(0.0, 5.0);
    inst.stations.push_back(s);
  }
  for (int r = 0; r < z; ++r) {
    Zone zone;
    zone.position = {rng.uniform(53.0, 55.0), rng.uniform(6.0, 14.0)};
    for (int k = 0; k < f; ++k) zone.frequencies.push_back(rng.bernoulli(0.2) ? 0.0 : rng.uniform());
    inst.zones.push_back(zone);
  }
  for (int k = 0; k < f; ++k) {
    inst.incident_types.push_back({"k" + std::to_string(k + 1), rng.uniform(0.1, 2.0), {}});
  }
  inst.distances = Matrix<double>(m, z);
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < z; ++r) inst.distances(j, r) = rng.uniform(1.0, 50.0);
  }
  inst.relations = CompatibilityRelations(n, m, f, z);
  return inst;
}

void random_relations(Instance& inst, Rng& rng, double p) {
  const int n = inst.num_vessels();
  const int m = inst.num_stations();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) inst.relations.set_placeable(i, j, rng.bernoulli(p));
    for (int k = 0; k < inst.num_incident_types(); ++k) inst.relations.set_equipped(i, k, rng.bernoulli(p));
    for (int j = 0; j < m; ++j) {
      for (int r = 0; r < inst.num_zones(); ++r) inst.relations.set_reaches(i, j, r, rng.bernoulli(p));
    }
  }
}

// Parses "x_<i>_<j>" into (i, j), 1-based.
std::optional<std::pair<int, int>> parse_x(const std::string& name) {
  if (name.size() < 5 || name[0] != 'x' || name[1] != '_') return std::nullopt;
  const std::size_t sep = name.find('_', 2);
  if (sep == std::string::npos) return std::nullopt;
  return std::make_pair(std::stoi(name.substr(2, sep - 2)), std::stoi(name.substr(sep + 1)));
}

}  // namespace

Instance random_small_instance(std::uint64_t seed, const SmallSpec& spec) {
  Rng rng(seed, 101);
  const int m = draw_between(rng, 1, spec.max_stations);
  const int n = draw_between(rng, 1, spec.max_vessels);
  const int z = draw_between(rng, 1, spec.max_zones);
  const int f = draw_between(rng, 1, spec.max_incidents);
  Instance inst = skeleton(rng, m, n, z, f);
  random_relations(inst, rng, spec.relation_p);

  if (spec.full_tide) {
    inst.tidal = TidalStateSet::single_full(m, n);
    return inst;
  }
  const int wanted = draw_between(rng, 1, spec.max_states);
  std::vector<TidalPattern> patterns;
  for (int attempt = 0; attempt < 50 && static_cast<int>(patterns.size()) < wanted; ++attempt) {
    TidalPattern p(m, n);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) p.set(j, i, rng.bernoulli(spec.operable_p));
    }
    if (std::find(patterns.begin(), patterns.end(), p) == patterns.end()) patterns.push_back(p);
  }
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  for (std::size_t e = 0; e < patterns.size(); ++e) {
    counts.push_back(1 + rng.index(5));
    total += counts.back();
  }
  for (std::size_t e = 0; e < patterns.size(); ++e) {
    inst.tidal.states.push_back(
        {patterns[e], static_cast<double>(counts[e]) / static_cast<double>(total), counts[e]});
  }
  inst.tidal.total_samples = total;
  return inst;
}

Instance correlated_tide_instance(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed, 202 + attempt);
    const int m = draw_between(rng, 3, 5);
    const int n = draw_between(rng, 2, 3);
    const int z = draw_between(rng, 3, 6);
    const int f = draw_between(rng, 1, 2);
    Instance inst = skeleton(rng, m, n, z, f);
    random_relations(inst, rng, 0.7);
    for (VesselType& v : inst.vessels) v.count = std::max(v.count, 1);

    // Pair (1, 1) clears every level; every other threshold lies inside the
    // tidal range, so only that pair has w = 1.
    inst.stations[0].base_depth_m = 3.0;
    inst.vessels[0].draught_m = 0.5;
    for (int j = 1; j < m; ++j) inst.stations[j].base_depth_m = rng.uniform(0.6, 1.0);
    for (int i = 1; i < n; ++i) inst.vessels[i].draught_m = rng.uniform(1.6, 2.0);
    inst.relations.set_placeable(0, 0);
    for (int k = 0; k < f; ++k) inst.relations.set_equipped(0, k);
    for (int r = 0; r < z; ++r) inst.relations.set_reaches(0, 0, r);

    const std::size_t T = 720;
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    tides::StationLevels levels;
    levels.levels = Matrix<double>(m, T);
    for (std::size_t t = 0; t < T; ++t) {
      levels.times.push_back(static_cast<std::int64_t>(t) * 60);
      const double level = 1.5 * std::sin(2.0 * kPi * static_cast<double>(t) / 745.2 + phase);
      for (int j = 0; j < m; ++j) levels.levels(j, t) = level;
    }
    inst.tidal = tides::derive_states(levels, inst.stations, inst.vessels);

    std::vector<double> w;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) w.push_back(recount_availability(levels, inst.stations[j], j, inst.vessels[i]));
    }
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) == w.end()) return inst;
  }
}

NaiveAxis naive_axis(const Instance& instance, VariantTag tag) {
  const int m = instance.num_stations();
  const int n = instance.num_vessels();
  NaiveAxis axis;
  if (tag == VariantTag::kBestTidal) {
    for (const TidalState& s : instance.tidal.states) {
      axis.weight.push_back(s.probability);
      std::vector<bool> row(static_cast<std::size_t>(m * n));
      for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) row[j * n + i] = s.pattern.operable(j, i);
      }
      axis.operable.push_back(row);
    }
    return axis;
  }

  // Availability from integer sample counts.
  const double total = static_cast<double>(instance.tidal.total_samples);
  std::vector<std::uint64_t> hits(static_cast<std::size_t>(m * n), 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      for (const TidalState& s : instance.tidal.states) {
        if (s.pattern.operable(j, i)) hits[j * n + i] += s.occurrences;
      }
    }
  }
  std::vector<double> gate(static_cast<std::size_t>(m * n));
  for (std::size_t b = 0; b < gate.size(); ++b) gate[b] = static_cast<double>(hits[b]) / total;
  if (tag == VariantTag::kManyZones) {
    std::uint64_t fleet = 0;
    for (const VesselType& v : instance.vessels) fleet += static_cast<std::uint64_t>(v.count);
    for (int j = 0; j < m; ++j) {
      std::uint64_t weighted = 0;
      for (int i = 0; i < n; ++i) weighted += hits[j * n + i] * static_cast<std::uint64_t>(instance.vessels[i].count);
      for (int i = 0; i < n; ++i) gate[j * n + i] = static_cast<double>(weighted) / (total * static_cast<double>(fleet));
    }
  }
  std::set<double> points(gate.begin(), gate.end());
  points.insert(0.0);
  points.insert(1.0);
  const std::vector<double> sorted(points.begin(), points.end());
  for (std::size_t a = 0; a + 1 < sorted.size(); ++a) {
    axis.weight.push_back(sorted[a + 1] - sorted[a]);
    std::vector<bool> row(static_cast<std::size_t>(m * n));
    for (std::size_t b = 0; b < row.size(); ++b) row[b] = gate[b] >= sorted[a + 1];
    axis.operable.push_back(row);
  }
  return axis;
}

namespace {

// Some stock of an equipped vessel could serve (k, r, t) from some station.
bool naive_coverable(const Instance& instance, const NaiveAxis& axis, int k, int r, std::size_t t) {
  const int n = instance.num_vessels();
  for (int j = 0; j < instance.num_stations(); ++j) {
    for (int i = 0; i < n; ++i) {
      if (instance.vessels[i].count > 0 && instance.relations.placeable(i, j) && instance.relations.equipped(i, k) &&
          instance.relations.reaches(i, j, r) && axis.operable[t][j * n + i]) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<double> naive_objective(const Instance& instance, const NaiveAxis& axis,
                                      const std::vector<int>& vessel_at) {
  const int n = instance.num_vessels();
  double total = 0.0;
  for (int k = 0; k < instance.num_incident_types(); ++k) {
    for (int r = 0; r < instance.num_zones(); ++r) {
      const double factor = instance.zones[r].frequencies[k] * instance.incident_types[k].severity;
      for (std::size_t t = 0; t < axis.weight.size(); ++t) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < instance.num_stations(); ++j) {
          const int i = vessel_at[j];
          if (i < 0) continue;
          if (!instance.relations.equipped(i, k) || !instance.relations.reaches(i, j, r)) continue;
          if (!axis.operable[t][j * n + i]) continue;
          best = std::min(best, instance.distances(j, r) / instance.vessels[i].speed_kn);
        }
        if (!std::isfinite(best)) {
          if (naive_coverable(instance, axis, k, r, t)) return std::nullopt;
          continue;
        }
        total += axis.weight[t] * factor * best;
      }
    }
  }
  return total;
}

NaiveOptimum naive_optimum(const Instance& instance, VariantTag tag) {
  const NaiveAxis axis = naive_axis(instance, tag);
  const int m = instance.num_stations();
  NaiveOptimum out;
  for (int k = 0; k < instance.num_incident_types(); ++k) {
    for (int r = 0; r < instance.num_zones(); ++r) {
      for (std::size_t t = 0; t < axis.weight.size(); ++t) {
        if (!naive_coverable(instance, axis, k, r, t)) return out;
      }
    }
  }
  std::vector<int> vessel_at(static_cast<std::size_t>(m), -1);
  std::vector<int> used(instance.vessels.size(), 0);
  std::function<void(int)> place = [&](int j) {
    if (j == m) {
      ++out.allocations;
      const auto value = naive_objective(instance, axis, vessel_at);
      if (value && (!out.value || *value < *out.value)) {
        out.value = value;
        out.vessel_at = vessel_at;
      }
      return;
    }
    vessel_at[j] = -1;
    place(j + 1);
    for (int i = 0; i < instance.num_vessels(); ++i) {
      if (!instance.relations.placeable(i, j) || used[i] >= instance.vessels[i].count) continue;
      vessel_at[j] = i;
      ++used[i];
      place(j + 1);
      --used[i];
    }
    vessel_at[j] = -1;
  };
  place(0);
  return out;
}

std::optional<double> lp_enumeration_optimum(const LpModel& lp) {
  const std::size_t N = lp.variables();
  std::vector<bool> is_x(N, false);
  std::map<int, std::vector<int>> by_station;
  for (std::size_t v = 0; v < N; ++v) {
    if (const auto ij = parse_x(lp.names[v])) {
      is_x[v] = true;
      by_station[ij->second].push_back(static_cast<int>(v));
    }
  }
  std::vector<std::vector<int>> choices;
  for (auto& [station, vars] : by_station) choices.push_back(vars);

  std::vector<double> value(N, 0.0);
  std::optional<double> best;

  auto evaluate = [&]() {
    for (std::size_t v = 0; v < N; ++v) {
      if (!is_x[v]) value[v] = 0.0;
    }
    // Rows over x alone.
    std::vector<bool> allowed(N, true);
    for (const LpRow& row : lp.rows) {
      double x_part = 0.0;
      double y_part = 0.0;
      bool has_y = false;
      for (const LpTerm& t : row.terms) {
        if (is_x[t.var]) {
          x_part += t.coef * value[t.var];
        } else {
          has_y = true;
          y_part += std::max(0.0, t.coef);
        }
      }
      if (!has_y) {
        const bool ok = row.sense == RowSense::kLessEqual      ? x_part <= row.rhs + 1e-9
                        : row.sense == RowSense::kGreaterEqual ? x_part >= row.rhs - 1e-9
                                                               : std::abs(x_part - row.rhs) <= 1e-9;
        if (!ok) return;
        continue;
      }
      if (row.sense == RowSense::kLessEqual && x_part + y_part > row.rhs + 1e-9) {
        for (const LpTerm& t : row.terms) {
          if (!is_x[t.var] && t.coef > 0.0) allowed[t.var] = false;
        }
      }
    }
    double total = 0.0;
    for (std::size_t v = 0; v < N; ++v) {
      if (is_x[v]) total += lp.objective[v] * value[v];
    }
    for (const LpRow& row : lp.rows) {
      if (row.sense != RowSense::kGreaterEqual) continue;
      bool has_y = false;
      double cheapest = std::numeric_limits<double>::infinity();
      for (const LpTerm& t : row.terms) {
        if (is_x[t.var]) continue;
        has_y = true;
        if (allowed[t.var] && t.coef >= row.rhs - 1e-9) cheapest = std::min(cheapest, lp.objective[t.var]);
      }
      if (!has_y) continue;
      if (!std::isfinite(cheapest)) return;
      total += cheapest;
    }
    if (!best || total < *best) best = total;
  };

  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (s == choices.size()) {
      evaluate();
      return;
    }
    walk(s + 1);
    for (int v : choices[s]) {
      value[v] = 1.0;
      walk(s + 1);
      value[v] = 0.0;
    }
  };
  walk(0);
  return best;
}

std::optional<std::vector<int>> find_exact_cover(const X3cInstance& x3c) {
  std::vector<bool> covered(static_cast<std::size_t>(x3c.universe), false);
  std::vector<int> chosen;
  std::function<bool()> search = [&]() {
    int first = -1;
    for (int e = 0; e < x3c.universe; ++e) {
      if (!covered[e]) {
        first = e;
        break;
      }
    }
    if (first < 0) return true;
    for (std::size_t d = 0; d < x3c.triples.size(); ++d) {
      const auto& t = x3c.triples[d];
      if (std::find(t.begin(), t.end(), first) == t.end()) continue;
      if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
      for (int e : t) covered[e] = true;
      chosen.push_back(static_cast<int>(d));
      if (search()) return true;
      chosen.pop_back();
      for (int e : t) covered[e] = false;
    }
    return false;
  };
  if (x3c.universe % 3 != 0) return std::nullopt;
  if (!search()) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool has_exact_cover(const X3cInstance& x3c) { return find_exact_cover(x3c).has_value(); }

double recount_availability(const tides::StationLevels& levels, const Station& station, int station_index,
                            const VesselType& vessel) {
  std::size_t hits = 0;
  for (std::size_t t = 0; t < levels.samples(); ++t) {
    if (station.base_depth_m + levels.levels(station_index, t) >= vessel.draught_m - 1e-9) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(levels.samples());
}

}  // namespace rcap::testing
