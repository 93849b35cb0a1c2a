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

#include "rcap/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>

#include <fmt/format.h>

namespace rcap {
namespace {

std::string csv_field(std::string text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<SuiteRun> default_suite_grid() {
  return {{VariantTag::kManyZones, 10},   {VariantTag::kManyZones, 50},   {VariantTag::kManyZones, 100},
          {VariantTag::kBetterTidal, 10}, {VariantTag::kBetterTidal, 20}, {VariantTag::kBetterTidal, 30},
          {VariantTag::kBestTidal, 1},    {VariantTag::kBestTidal, 2}};
}

std::vector<SuiteResult> solve_variant_suite(const Instance& full, std::span<const SuiteRun> runs,
                                             std::uint64_t seed, const SolveLimits& limits, LinkForm link) {
  using Clock = std::chrono::steady_clock;
  std::optional<FullResolutionEvaluator> evaluator;
  std::vector<SuiteResult> out;
  out.reserve(runs.size());
  for (const SuiteRun& run : runs) {
    SuiteResult r;
    r.seed = seed;
    r.run = run;
    try {
      const int k = std::clamp(run.zones, 1, std::max(1, full.num_zones()));
      r.run.zones = k;
      r.clustering = geo::cluster_zones(full.zones, k, seed);
      const Instance reduced = geo::clustered_instance(full, r.clustering);

      const auto built = Clock::now();
      const ModelVariant variant = make_variant(reduced, run.variant);
      r.size = model_size(reduced, variant, link);
      r.build_seconds = std::chrono::duration<double>(Clock::now() - built).count();

      r.report = solve_cavabb(reduced, variant, limits);
      if (r.report->objective) {
        if (!evaluator) evaluator.emplace(full);
        r.full = evaluator->evaluate(r.report->allocation);
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string suite_csv_header() {
  return "seed,variant,zones,status,objective,lower_bound,full_objective,uncovered,nodes,wall_seconds,"
         "build_seconds,variables,rows,error\n";
}

std::string suite_csv_row(const SuiteResult& r, bool timings) {
  std::string out = fmt::format("{},{},{},", r.seed, to_string(r.run.variant), r.run.zones);
  if (r.report) {
    out += fmt::format("{},", to_string(r.report->status));
    if (r.report->objective) out += fmt::format("{:.17g}", *r.report->objective);
    out += ",";
    if (std::isfinite(r.report->lower_bound)) out += fmt::format("{:.17g}", r.report->lower_bound);
  } else {
    out += "error,,";
  }
  out += ",";
  if (r.full && r.full->objective) out += fmt::format("{:.17g}", *r.full->objective);
  out += ",";
  if (r.full) out += fmt::format("{}", r.full->uncovered.size());
  out += ",";
  if (r.report) out += fmt::format("{}", r.report->nodes);
  out += ",";
  if (r.report && timings) out += fmt::format("{:.6f}", r.report->wall_seconds);
  out += ",";
  if (timings) out += fmt::format("{:.6f}", r.build_seconds);
  out += fmt::format(",{},{},{}\n", r.size.variables(), r.size.rows(), csv_field(r.error));
  return out;
}

}  // namespace rcap
