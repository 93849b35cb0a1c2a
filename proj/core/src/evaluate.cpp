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

#include "rcap/evaluate.hpp"

#include <fmt/format.h>

#include "rcap/errors.hpp"

namespace rcap {

FullResolutionEvaluator::FullResolutionEvaluator(const Instance& full)
    : full_(full),
      variant_(make_variant(full, VariantTag::kBestTidal, nullptr)),
      context_(full_, variant_) {}

Evaluation FullResolutionEvaluator::evaluate(const Allocation& alloc, bool with_plan) const {
  const auto violations = validate_allocation(full_, alloc);
  if (!violations.empty()) {
    throw MalformedInputError(fmt::format("invalid allocation: {}", violations.front().message));
  }
  DispatchResult d = context_.dispatch(alloc, with_plan);
  Evaluation out;
  out.objective = d.objective;
  out.covered_objective = d.covered_objective;
  out.uncovered = d.unserved.to_vector();
  out.uncoverable = context_.coverable().capacity() - context_.coverable().count();
  out.per_incident = std::move(d.per_incident);
  out.plan = std::move(d.plan);
  return out;
}

Evaluation full_resolution_objective(const Instance& full, const Allocation& alloc, bool with_plan) {
  const FullResolutionEvaluator evaluator(full);
  return evaluator.evaluate(alloc, with_plan);
}

std::vector<ComparisonRow> compare_allocations(
    const Instance& full, std::span<const std::pair<std::string, Allocation>> entries) {
  const FullResolutionEvaluator evaluator(full);
  std::vector<ComparisonRow> rows;
  rows.reserve(entries.size());
  for (const auto& [label, alloc] : entries) {
    Evaluation e = evaluator.evaluate(alloc);
    rows.push_back({label, e.objective, e.uncovered.size(), std::move(e.per_incident)});
  }
  return rows;
}

std::string comparison_csv(const Instance& full, std::span<const ComparisonRow> rows) {
  std::string out = "label,objective,uncovered";
  for (const IncidentType& k : full.incident_types) out += "," + k.name;
  out += "\n";
  for (const ComparisonRow& row : rows) {
    out += row.label;
    out += ",";
    if (row.objective) out += fmt::format("{:.17g}", *row.objective);
    out += fmt::format(",{}", row.uncovered);
    for (double v : row.per_incident) out += fmt::format(",{:.17g}", v);
    out += "\n";
  }
  return out;
}

}  // namespace rcap
