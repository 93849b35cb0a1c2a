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

// Closest Assignment Vessel Allocation by Branch and Bound.
//
// Depth-first search over stations in index order. Each node assigns one
// vessel type with remaining stock to the next station, fastest type first,
// or leaves it empty. The bound is the dispatch objective when every
// undecided station could host every type that still has stock at once.

#ifndef RCAP_CAVABB_HPP_
#define RCAP_CAVABB_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rcap/dispatch.hpp"
#include "rcap/model.hpp"

namespace rcap {

struct SolveLimits {
  double time_limit_s = 600.0;
  std::uint64_t node_limit = 0;  // 0 means unlimited
  int threads = 1;
  bool warm_start = true;
  // Local search evaluations spent on the initial incumbent.
  std::uint64_t warm_start_evaluations = 5000;
};

enum class SolveStatus { kOptimal, kInfeasible, kLimitReached };

// "optimal", "infeasible", "time-limit-bound".
std::string_view to_string(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  VariantTag variant = VariantTag::kBestTidal;
  std::optional<double> objective;
  double lower_bound = 0.0;
  Allocation allocation;
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
  // Triples no placement can serve; non-empty only for infeasible instances.
  std::vector<Triple> uncoverable;
  bool node_limit_hit = false;
  bool time_limit_hit = false;
};

// Exact solve of |variant| on |instance|. With several threads the root
// subtrees are searched in parallel; completed searches report the same
// objective and allocation for every thread count.
SolveReport solve_cavabb(const Instance& instance, const ModelVariant& variant,
                         const SolveLimits& limits = {});

SolveReport solve_cavabb(const Instance& instance, VariantTag tag, const SolveLimits& limits = {});

// Greedy fastest-first construction followed by first-improvement local
// search over reassignments and swaps. Returns the vessel per station (-1 for
// empty) or nothing if no feasible allocation was found.
std::optional<std::vector<int>> warm_start_allocation(const DispatchContext& context,
                                                      std::uint64_t max_evaluations);

}  // namespace rcap

#endif  // RCAP_CAVABB_HPP_
