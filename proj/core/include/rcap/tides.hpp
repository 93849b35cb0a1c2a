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

// Water levels, tidal states and corrected availabilities.

#ifndef RCAP_TIDES_HPP_
#define RCAP_TIDES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcap/model.hpp"

namespace rcap::tides {

struct Sample {
  std::int64_t time = 0;  // UTC seconds
  double level = 0.0;     // meters

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct GaugeSeries {
  std::string gauge_id;
  GeoPoint position;
  std::vector<Sample> samples;

  std::size_t size() const { return samples.size(); }
};

// Throws OutOfOrderError, DuplicateTimestampError or MalformedInputError for
// non-finite levels.
void check_series(const GaugeSeries& series);

// Forward-filled resampling onto start, start + step, ... <= end. Each grid
// point takes the latest sample at or before it; a grid point further than
// |max_gap| seconds from that sample, or before the first sample, throws
// AlignmentError.
GaugeSeries align_to_grid(const GaugeSeries& series, std::int64_t start, std::int64_t end,
                          std::int64_t step = 60, std::int64_t max_gap = 600);

// Water levels per station on a shared time grid.
struct StationLevels {
  std::vector<std::int64_t> times;
  Matrix<double> levels;  // stations x times

  std::size_t stations() const { return levels.rows(); }
  std::size_t samples() const { return times.size(); }
};

using DistanceFn = std::function<double(const GeoPoint&, const GeoPoint&)>;

// Inverse-distance weighting over the three nearest gauges (ties by gauge
// order). A gauge closer than 1e-9 nm is copied verbatim. Throws
// ConfigurationError for fewer than three gauges and AlignmentError when the
// gauges do not share one time grid.
StationLevels interpolate_station_levels(std::span<const GaugeSeries> gauges,
                                         std::span<const Station> stations,
                                         const DistanceFn& distance = {});

inline constexpr double kDepthTolerance = 1e-9;

// Operable pairs at time t: base_depth_j + level_j(t) >= draught_i. Distinct
// patterns are kept in order of first occurrence with p = count / T. Throws
// EmptyInputError for an empty series.
TidalStateSet derive_states(const StationLevels& levels, std::span<const Station> stations,
                            std::span<const VesselType> vessels);

struct AvailabilityProfile {
  Matrix<double> pair;  // w_ji, stations x vessels
  // w_j; absent when the fleet is empty.
  std::optional<std::vector<double>> station;

  // Throws DivisionByZeroError when |station| is absent.
  const std::vector<double>& station_or_throw() const;
};

// w_ji = sum of p_e over states containing (j, i) and
// w_j = sum_i w_ji a_i / sum_i a_i.
AvailabilityProfile availability_profile(const TidalStateSet& states,
                                         std::span<const VesselType> vessels);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalSet {
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
};

// Consecutive intervals between the distinct values of breakpoints plus
// {0, 1}. Throws DomainError for a breakpoint outside [0, 1].
IntervalSet interval_set(std::span<const double> breakpoints);

struct CorrelationMatrix {
  Matrix<double> values;
  Matrix<std::uint8_t> defined;  // 0 where a series has zero variance

  std::optional<double> at(std::size_t a, std::size_t b) const {
    if (!defined(a, b)) return std::nullopt;
    return values(a, b);
  }
};

// Pearson correlation of every gauge pair. Throws AlignmentError if lengths
// differ and EmptyInputError for fewer than two samples.
CorrelationMatrix correlation_matrix(std::span<const GaugeSeries> gauges);

// True iff sorting pairs by decreasing w_ji (ties by station, then vessel)
// turns every state into a prefix of that order.
bool is_nested(const TidalStateSet& states, const AvailabilityProfile& profile);

}  // namespace rcap::tides

#endif  // RCAP_TIDES_HPP_
