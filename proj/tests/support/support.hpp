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

// Random fixtures and independent reference implementations for tests.
// Nothing here calls the dispatch, solver or model code it checks.

#ifndef RCAP_TESTS_SUPPORT_HPP_
#define RCAP_TESTS_SUPPORT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rcap/complexity.hpp"
#include "rcap/dispatch.hpp"
#include "rcap/ip_model.hpp"
#include "rcap/model.hpp"
#include "rcap/tides.hpp"

namespace rcap::testing {

struct SmallSpec {
  int max_stations = 6;
  int max_vessels = 3;
  int max_zones = 8;
  int max_incidents = 2;
  int max_states = 4;
  // Probability of each pair being operable in a random state.
  double operable_p = 0.75;
  // Membership probability for C, B and S.
  double relation_p = 0.85;
  // Use the single full tidal state.
  bool full_tide = false;
};

Instance random_small_instance(std::uint64_t seed, const SmallSpec& spec = {});

// Instance whose station levels are one series shifted by per-station
// constants: states are nested and every w_ji is distinct.
Instance correlated_tide_instance(std::uint64_t seed);

// Scenario axis rebuilt from the instance with plain loops.
struct NaiveAxis {
  std::vector<double> weight;
  std::vector<std::vector<bool>> operable;  // [scenario][j * n + i]
};
NaiveAxis naive_axis(const Instance& instance, VariantTag tag);

// Fastest feasible responder per triple; nothing if a triple is unserved.
std::optional<double> naive_objective(const Instance& instance, const NaiveAxis& axis,
                                      const std::vector<int>& vessel_at);

struct NaiveOptimum {
  std::optional<double> value;
  std::vector<int> vessel_at;
  std::uint64_t allocations = 0;
};
// Enumerates every allocation with nested loops.
NaiveOptimum naive_optimum(const Instance& instance, VariantTag tag);

// Optimum of a minimization over binaries with the row structure of
// build_model, by enumerating the x variables (named x_i_j) one station at a
// time and choosing the cheapest permitted y per cover row.
std::optional<double> lp_enumeration_optimum(const LpModel& lp);

// True iff some q triples of |x3c| partition the universe.
bool has_exact_cover(const X3cInstance& x3c);
std::optional<std::vector<int>> find_exact_cover(const X3cInstance& x3c);

// Pattern recount: fraction of grid points with base + level >= draught.
double recount_availability(const tides::StationLevels& levels, const Station& station, int station_index,
                            const VesselType& vessel);

}  // namespace rcap::testing

#endif  // RCAP_TESTS_SUPPORT_HPP_
