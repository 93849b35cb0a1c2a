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

// Re-scoring of allocations on the unclustered instance with explicit tidal
// states.

#ifndef RCAP_EVALUATE_HPP_
#define RCAP_EVALUATE_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcap/dispatch.hpp"
#include "rcap/model.hpp"

namespace rcap {

struct Evaluation {
  // Absent while any allocation-caused gap remains.
  std::optional<double> objective;
  double covered_objective = 0.0;
  // Triples some allocation could serve but this one does not.
  std::vector<Triple> uncovered;
  // Triples no allocation can serve; excluded from |uncovered|.
  std::size_t uncoverable = 0;
  std::vector<double> per_incident;
  std::optional<DispatchPlan> plan;
};

// Reusable evaluator; builds the best-tidal dispatch context once.
class FullResolutionEvaluator {
 public:
  explicit FullResolutionEvaluator(const Instance& full);

  // Throws MalformedInputError if |alloc| breaks an Allocation invariant.
  Evaluation evaluate(const Allocation& alloc, bool with_plan = false) const;

 private:
  const Instance& full_;
  ModelVariant variant_;
  DispatchContext context_;
};

Evaluation full_resolution_objective(const Instance& full, const Allocation& alloc,
                                     bool with_plan = false);

struct ComparisonRow {
  std::string label;
  std::optional<double> objective;
  std::size_t uncovered = 0;
  std::vector<double> per_incident;
};

std::vector<ComparisonRow> compare_allocations(
    const Instance& full, std::span<const std::pair<std::string, Allocation>> entries);

// Header: label,objective,uncovered,<incident names...>. An undefined
// objective is written as an empty field.
std::string comparison_csv(const Instance& full, std::span<const ComparisonRow> rows);

}  // namespace rcap

#endif  // RCAP_EVALUATE_HPP_
