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

#include "rcap/tides.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "rcap/errors.hpp"
#include "rcap/geo.hpp"

namespace rcap::tides {

void check_series(const GaugeSeries& series) {
  for (std::size_t t = 0; t < series.samples.size(); ++t) {
    const Sample& s = series.samples[t];
    if (!std::isfinite(s.level)) {
      throw MalformedInputError(
          fmt::format("gauge {}: level at sample {} is not finite", series.gauge_id, t + 1));
    }
    if (t == 0) continue;
    const std::int64_t prev = series.samples[t - 1].time;
    if (s.time == prev) {
      throw DuplicateTimestampError(
          fmt::format("gauge {}: duplicate timestamp at sample {}", series.gauge_id, t + 1));
    }
    if (s.time < prev) {
      throw OutOfOrderError(
          fmt::format("gauge {}: timestamp at sample {} goes backwards", series.gauge_id, t + 1));
    }
  }
}

GaugeSeries align_to_grid(const GaugeSeries& series, std::int64_t start, std::int64_t end,
                          std::int64_t step, std::int64_t max_gap) {
  if (step <= 0) throw ParameterError("grid step must be positive");
  if (end < start) throw ParameterError("grid end precedes start");
  check_series(series);
  GaugeSeries out{series.gauge_id, series.position, {}};
  out.samples.reserve(static_cast<std::size_t>((end - start) / step + 1));
  std::size_t cursor = 0;
  const auto& in = series.samples;
  for (std::int64_t t = start; t <= end; t += step) {
    while (cursor + 1 < in.size() && in[cursor + 1].time <= t) ++cursor;
    if (in.empty() || in[cursor].time > t) {
      throw AlignmentError(fmt::format("gauge {}: no sample at or before {}", series.gauge_id, t));
    }
    if (t - in[cursor].time > max_gap) {
      throw AlignmentError(fmt::format("gauge {}: gap of {} s before {} exceeds {} s",
                                       series.gauge_id, t - in[cursor].time, t, max_gap));
    }
    out.samples.push_back({t, in[cursor].level});
  }
  return out;
}

StationLevels interpolate_station_levels(std::span<const GaugeSeries> gauges,
                                         std::span<const Station> stations,
                                         const DistanceFn& distance) {
  if (gauges.size() < 3) {
    throw ConfigurationError(
        fmt::format("interpolation needs at least 3 gauges, got {}", gauges.size()));
  }
  const auto& grid = gauges.front().samples;
  for (const GaugeSeries& g : gauges) {
    bool same = g.samples.size() == grid.size();
    for (std::size_t t = 0; same && t < grid.size(); ++t) same = g.samples[t].time == grid[t].time;
    if (!same) {
      throw AlignmentError(fmt::format("gauge {} is not on the grid of gauge {}", g.gauge_id,
                                       gauges.front().gauge_id));
    }
  }
  const DistanceFn dist = distance ? distance : DistanceFn(geo::haversine_nm);

  StationLevels out;
  out.times.reserve(grid.size());
  for (const Sample& s : grid) out.times.push_back(s.time);
  out.levels = Matrix<double>(stations.size(), grid.size());

  std::vector<std::pair<double, std::size_t>> near(gauges.size());
  for (std::size_t j = 0; j < stations.size(); ++j) {
    for (std::size_t g = 0; g < gauges.size(); ++g) {
      near[g] = {dist(stations[j].position, gauges[g].position), g};
    }
    std::partial_sort(near.begin(), near.begin() + 3, near.end());
    if (near[0].first < 1e-9) {
      const auto& src = gauges[near[0].second].samples;
      for (std::size_t t = 0; t < grid.size(); ++t) out.levels(j, t) = src[t].level;
      continue;
    }
    double weights[3];
    double total = 0.0;
    for (int g = 0; g < 3; ++g) {
      weights[g] = 1.0 / near[g].first;
      total += weights[g];
    }
    for (std::size_t t = 0; t < grid.size(); ++t) {
      double level = 0.0;
      for (int g = 0; g < 3; ++g) level += weights[g] * gauges[near[g].second].samples[t].level;
      out.levels(j, t) = level / total;
    }
  }
  return out;
}

TidalStateSet derive_states(const StationLevels& levels, std::span<const Station> stations,
                            std::span<const VesselType> vessels) {
  const std::size_t T = levels.samples();
  if (T == 0) throw EmptyInputError("water level series is empty");
  if (levels.stations() != stations.size()) {
    throw MalformedInputError(fmt::format("levels cover {} stations, instance has {}",
                                          levels.stations(), stations.size()));
  }
  const int m = static_cast<int>(stations.size());
  const int n = static_cast<int>(vessels.size());

  std::unordered_map<TidalPattern, std::size_t> index;
  std::vector<TidalPattern> patterns;
  std::vector<std::uint64_t> counts;
  for (std::size_t t = 0; t < T; ++t) {
    TidalPattern e(m, n);
    for (int j = 0; j < m; ++j) {
      const double depth = stations[j].base_depth_m + levels.levels(j, t);
      for (int i = 0; i < n; ++i) {
        if (depth >= vessels[i].draught_m - kDepthTolerance) e.set(j, i);
      }
    }
    auto [it, inserted] = index.try_emplace(std::move(e), patterns.size());
    if (inserted) {
      patterns.push_back(it->first);
      counts.push_back(0);
    }
    ++counts[it->second];
  }

  TidalStateSet out;
  out.total_samples = T;
  out.states.reserve(patterns.size());
  for (std::size_t e = 0; e < patterns.size(); ++e) {
    out.states.push_back({std::move(patterns[e]),
                          static_cast<double>(counts[e]) / static_cast<double>(T), counts[e]});
  }
  return out;
}

const std::vector<double>& AvailabilityProfile::station_or_throw() const {
  if (!station) throw DivisionByZeroError("station availability undefined: total fleet is zero");
  return *station;
}

AvailabilityProfile availability_profile(const TidalStateSet& states,
                                         std::span<const VesselType> vessels) {
  const int n = static_cast<int>(vessels.size());
  const int m = states.empty() ? 0 : states.states.front().pattern.stations();
  std::uint64_t occurrences = 0;
  for (const TidalState& s : states.states) occurrences += s.occurrences;
  // Counting keeps w_ji identical to a direct recount of the samples.
  const bool counted = states.total_samples > 0 && occurrences == states.total_samples;

  AvailabilityProfile out;
  out.pair = Matrix<double>(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      if (counted) {
        std::uint64_t hits = 0;
        for (const TidalState& s : states.states) {
          if (s.pattern.operable(j, i)) hits += s.occurrences;
        }
        out.pair(j, i) = static_cast<double>(hits) / static_cast<double>(states.total_samples);
      } else {
        CompensatedSum w;
        for (const TidalState& s : states.states) {
          if (s.pattern.operable(j, i)) w += s.probability;
        }
        out.pair(j, i) = std::clamp(w.value(), 0.0, 1.0);
      }
    }
  }

  long long fleet = 0;
  for (const VesselType& v : vessels) fleet += v.count;
  if (fleet > 0) {
    std::vector<double> station(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      if (counted) {
        std::uint64_t hits = 0;
        for (const TidalState& s : states.states) {
          for (int i = 0; i < n; ++i) {
            if (s.pattern.operable(j, i)) hits += s.occurrences * static_cast<std::uint64_t>(vessels[i].count);
          }
        }
        station[j] = static_cast<double>(hits) /
                     (static_cast<double>(states.total_samples) * static_cast<double>(fleet));
      } else {
        CompensatedSum w;
        for (int i = 0; i < n; ++i) w += out.pair(j, i) * vessels[i].count;
        station[j] = std::clamp(w.value() / static_cast<double>(fleet), 0.0, 1.0);
      }
    }
    out.station = std::move(station);
  }
  return out;
}

IntervalSet interval_set(std::span<const double> breakpoints) {
  std::vector<double> points{0.0, 1.0};
  for (double p : breakpoints) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError(fmt::format("breakpoint {} outside [0, 1]", p));
    }
    points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  IntervalSet out;
  out.intervals.reserve(points.size() - 1);
  for (std::size_t a = 0; a + 1 < points.size(); ++a) {
    out.intervals.push_back({points[a], points[a + 1]});
  }
  return out;
}

CorrelationMatrix correlation_matrix(std::span<const GaugeSeries> gauges) {
  const std::size_t g = gauges.size();
  CorrelationMatrix out{Matrix<double>(g, g), Matrix<std::uint8_t>(g, g)};
  if (g == 0) return out;
  const std::size_t T = gauges.front().size();
  for (const GaugeSeries& s : gauges) {
    if (s.size() != T) {
      throw AlignmentError(fmt::format("gauge {} has {} samples, expected {}", s.gauge_id,
                                       s.size(), T));
    }
  }
  if (T < 2) throw EmptyInputError("correlation needs at least two samples per gauge");

  std::vector<std::vector<double>> centered(g, std::vector<double>(T));
  std::vector<double> norm(g);
  for (std::size_t a = 0; a < g; ++a) {
    CompensatedSum sum;
    for (const Sample& s : gauges[a].samples) sum += s.level;
    const double mean = sum.value() / static_cast<double>(T);
    CompensatedSum sq;
    for (std::size_t t = 0; t < T; ++t) {
      centered[a][t] = gauges[a].samples[t].level - mean;
      sq += centered[a][t] * centered[a][t];
    }
    norm[a] = std::sqrt(sq.value());
  }
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = a; b < g; ++b) {
      if (norm[a] == 0.0 || norm[b] == 0.0) continue;
      double r = 1.0;
      if (a != b) {
        CompensatedSum dot;
        for (std::size_t t = 0; t < T; ++t) dot += centered[a][t] * centered[b][t];
        r = std::clamp(dot.value() / (norm[a] * norm[b]), -1.0, 1.0);
      }
      out.values(a, b) = out.values(b, a) = r;
      out.defined(a, b) = out.defined(b, a) = 1;
    }
  }
  return out;
}

bool is_nested(const TidalStateSet& states, const AvailabilityProfile& profile) {
  const std::size_t m = profile.pair.rows();
  const std::size_t n = profile.pair.cols();
  std::vector<std::pair<int, int>> order;
  order.reserve(m * n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) order.emplace_back(static_cast<int>(j), static_cast<int>(i));
  }
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return profile.pair(a.first, a.second) > profile.pair(b.first, b.second);
  });
  for (const TidalState& s : states.states) {
    const std::size_t size = s.pattern.count();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (s.pattern.operable(order[pos].first, order[pos].second) != (pos < size)) return false;
    }
  }
  return true;
}

}  // namespace rcap::tides
