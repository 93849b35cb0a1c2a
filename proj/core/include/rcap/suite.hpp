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

// Cluster, build, solve and re-score runs over a grid of variants and zone
// counts.

#ifndef RCAP_SUITE_HPP_
#define RCAP_SUITE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcap/cavabb.hpp"
#include "rcap/evaluate.hpp"
#include "rcap/geo.hpp"
#include "rcap/ip_model.hpp"
#include "rcap/model.hpp"

namespace rcap {

struct SuiteRun {
  VariantTag variant = VariantTag::kBestTidal;
  int zones = 0;
};

// many-zones at 10, 50, 100; better-tidal at 10, 20, 30; best-tidal at 1, 2.
std::vector<SuiteRun> default_suite_grid();

struct SuiteResult {
  std::uint64_t seed = 0;
  SuiteRun run;
  std::optional<SolveReport> report;
  std::optional<Evaluation> full;
  ModelSize size;
  double build_seconds = 0.0;
  geo::ClusteringResult clustering;
  // Set when the run failed; the other runs are unaffected.
  std::string error;
};

// Runs every entry of |runs| on |full|. Zone counts above the instance size
// are clamped. Failures are captured per run.
std::vector<SuiteResult> solve_variant_suite(const Instance& full, std::span<const SuiteRun> runs,
                                             std::uint64_t seed, const SolveLimits& limits = {},
                                             LinkForm link = LinkForm::kAggregated);

// Header: seed,variant,zones,status,objective,lower_bound,full_objective,
// uncovered,nodes,wall_seconds,build_seconds,variables,rows,error
std::string suite_csv_header();
// Without |timings| the wall clock columns are left empty.
std::string suite_csv_row(const SuiteResult& result, bool timings = true);

}  // namespace rcap

#endif  // RCAP_SUITE_HPP_
