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

// rcap command-line tool.
//
// Exit codes: 0 ok, 2 infeasible, 3 limit reached with an incumbent,
// 4 input error, 1 anything else.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rcap/cavabb.hpp"
#include "rcap/dispatch.hpp"
#include "rcap/errors.hpp"
#include "rcap/evaluate.hpp"
#include "rcap/gauge_io.hpp"
#include "rcap/generate.hpp"
#include "rcap/geo.hpp"
#include "rcap/ip_model.hpp"
#include "rcap/json_io.hpp"
#include "rcap/suite.hpp"
#include "rcap/tides.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInput = 4;

int exit_code(rcap::SolveStatus status) {
  switch (status) {
    case rcap::SolveStatus::kOptimal:
      return kExitOk;
    case rcap::SolveStatus::kInfeasible:
      return kExitInfeasible;
    case rcap::SolveStatus::kLimitReached:
      return kExitLimit;
  }
  return 1;
}

rcap::Catalog load_catalog(const std::string& path) {
  if (path.empty()) return rcap::default_catalog();
  return rcap::catalog_from_json(rcap::io::read_text_file(path));
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    rcap::io::write_text_file(path, text);
  }
}

// Reads <dir>/<id>.csv for every catalog gauge site that has a file.
std::vector<rcap::tides::GaugeSeries> read_gauge_dir(const std::string& dir, const rcap::Catalog& catalog) {
  std::vector<rcap::tides::GaugeSeries> out;
  for (const rcap::GaugeSite& site : catalog.gauges) {
    const fs::path file = fs::path(dir) / (site.id + ".csv");
    if (!fs::exists(file)) {
      std::cerr << fmt::format("warning: no series for gauge {} in {}\n", site.id, dir);
      continue;
    }
    out.push_back(rcap::tides::read_gauge_file(file.string(), site.id, site.position));
  }
  return out;
}

// Puts all series on the minute grid they share.
std::vector<rcap::tides::GaugeSeries> align_all(const std::vector<rcap::tides::GaugeSeries>& gauges,
                                                std::int64_t step) {
  if (gauges.empty()) throw rcap::EmptyInputError("no gauge series");
  std::int64_t start = gauges.front().samples.front().time;
  std::int64_t end = gauges.front().samples.back().time;
  for (const auto& g : gauges) {
    start = std::max(start, g.samples.front().time);
    end = std::min(end, g.samples.back().time);
  }
  if (end < start) throw rcap::AlignmentError("gauge series do not overlap");
  start = (start + step - 1) / step * step;
  std::vector<rcap::tides::GaugeSeries> out;
  out.reserve(gauges.size());
  for (const auto& g : gauges) out.push_back(rcap::tides::align_to_grid(g, start, end, step));
  return out;
}

struct Reduced {
  rcap::Instance instance;
  std::optional<rcap::geo::ClusteringResult> clustering;
};

Reduced reduce(const rcap::Instance& full, int zones, std::uint64_t seed) {
  if (zones <= 0 || zones >= full.num_zones()) return {full, std::nullopt};
  rcap::geo::ClusteringResult c = rcap::geo::cluster_zones(full.zones, zones, seed);
  rcap::Instance inst = rcap::geo::clustered_instance(full, c);
  return {std::move(inst), std::move(c)};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

void print_size(const rcap::ModelSize& s) {
  std::cout << fmt::format("variables {} (x {}, y {})\nrows {} (cover {}, link {}, fleet {}, station {})\n",
                           s.variables(), s.x, s.y, s.rows(), s.cover_rows, s.link_rows, s.fleet_rows,
                           s.station_rows);
}

std::string dispatch_json(const rcap::Instance& inst, const rcap::Allocation& alloc,
                          const rcap::DispatchPlan& plan) {
  std::string out = "{\"triples\": [\n";
  bool first = true;
  for (int k = 0; k < plan.incident_types(); ++k) {
    for (int r = 0; r < plan.zones(); ++r) {
      for (int e = 0; e < plan.scenarios(); ++e) {
        const auto j = plan.responder(k, r, e);
        if (!j) continue;
        out += fmt::format("{}{{\"incident\": {}, \"zone\": {}, \"state\": {}, \"station\": {}, \"vessel\": {}}}",
                           first ? "" : ",\n", k + 1, r + 1, e + 1, *j + 1, alloc.vessel_at(*j).value_or(-1) + 1);
        first = false;
      }
    }
  }
  out += fmt::format("\n], \"incident_types\": {}, \"zones\": {}, \"states\": {}}}\n", inst.num_incident_types(),
                     inst.num_zones(), inst.tidal.size());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rescue craft allocation: generate, cluster, build, solve and evaluate instances"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rcap 0.1.0");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a seeded synthetic instance");
  std::uint64_t gen_seed = 1;
  std::string gen_profile = "paper", gen_catalog, gen_gauge_dir, gen_out, gen_gauges_out, gen_geojson;
  int gen_zones = 0;
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--profile", gen_profile, "paper, desk, small or tiny")->capture_default_str();
  gen->add_option("--zones", gen_zones, "Override the profile zone count");
  gen->add_option("--catalog", gen_catalog, "Catalog JSON replacing the built-in fixture");
  gen->add_option("--gauge-dir", gen_gauge_dir, "Directory of <gauge id>.csv files instead of synthetic tides");
  gen->add_option("--gauges-out", gen_gauges_out, "Write the gauge series used as CSV files here");
  gen->add_option("--geojson", gen_geojson, "Write stations and zones as GeoJSON");
  gen->add_option("-o,--out", gen_out, "Instance JSON path (stdout if omitted)");

  // tides
  auto* tides_cmd = app.add_subcommand("tides", "Gauge series retrieval and tidal state derivation");
  tides_cmd->require_subcommand(1);
  auto* fetch = tides_cmd->add_subcommand("fetch", "Download one gauge series");
  std::string fetch_endpoint, fetch_gauge, fetch_from, fetch_to, fetch_out;
  fetch->add_option("--endpoint", fetch_endpoint, "Base URL (default: $RCAP_GAUGE_ENDPOINT)");
  fetch->add_option("--gauge", fetch_gauge, "Gauge id")->required();
  fetch->add_option("--from", fetch_from, "Start, ISO-8601 UTC")->required();
  fetch->add_option("--to", fetch_to, "End, ISO-8601 UTC")->required();
  fetch->add_option("-o,--out", fetch_out, "CSV path (stdout if omitted)");

  auto* derive = tides_cmd->add_subcommand("derive", "Replace the tidal states of an instance from gauge files");
  std::string derive_instance, derive_dir, derive_catalog, derive_out, derive_corr;
  std::int64_t derive_step = 60;
  derive->add_option("--instance", derive_instance, "Instance JSON")->required();
  derive->add_option("--gauge-dir", derive_dir, "Directory of <gauge id>.csv files")->required();
  derive->add_option("--catalog", derive_catalog, "Catalog JSON with the gauge sites");
  derive->add_option("--step", derive_step, "Grid step in seconds")->capture_default_str();
  derive->add_option("--correlation", derive_corr, "Write the gauge correlation matrix as CSV");
  derive->add_option("-o,--out", derive_out, "Instance JSON path (stdout if omitted)");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Aggregate zones with k-means");
  std::string cl_instance, cl_out, cl_geojson;
  int cl_zones = 10;
  std::uint64_t cl_seed = 1;
  cluster->add_option("--instance", cl_instance, "Instance JSON")->required();
  cluster->add_option("--zones", cl_zones, "Number of clusters")->capture_default_str();
  cluster->add_option("--seed", cl_seed, "Random seed")->capture_default_str();
  cluster->add_option("--geojson", cl_geojson, "Write the clusters as GeoJSON");
  cluster->add_option("-o,--out", cl_out, "Clustered instance JSON (stdout if omitted)");

  // build
  auto* build = app.add_subcommand("build", "Build the integer program of a variant");
  std::string b_instance, b_variant = "best-tidal", b_link = "aggregated", b_lp;
  int b_zones = 0;
  std::uint64_t b_seed = 1;
  build->add_option("--instance", b_instance, "Instance JSON")->required();
  build->add_option("--variant", b_variant, "best-tidal, better-tidal or many-zones")->capture_default_str();
  build->add_option("--zones", b_zones, "Cluster to this many zones first (0 keeps all)");
  build->add_option("--seed", b_seed, "Clustering seed")->capture_default_str();
  build->add_option("--link-form", b_link, "aggregated or disaggregated")->capture_default_str();
  build->add_option("--export-lp", b_lp, "Write the model in CPLEX LP format");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a variant with branch and bound");
  std::string s_instance, s_variant = "best-tidal", s_out, s_alloc_out;
  int s_zones = 0, s_threads = 1;
  double s_time = 600.0;
  std::uint64_t s_nodes = 0, s_seed = 1;
  bool s_no_timings = false, s_no_eval = false;
  solve->add_option("--instance", s_instance, "Instance JSON")->required();
  solve->add_option("--variant", s_variant, "best-tidal, better-tidal or many-zones")->capture_default_str();
  solve->add_option("--zones", s_zones, "Cluster to this many zones first (0 keeps all)");
  solve->add_option("--seed", s_seed, "Clustering seed")->capture_default_str();
  solve->add_option("--time-limit", s_time, "Seconds")->capture_default_str();
  solve->add_option("--node-limit", s_nodes, "Node limit, 0 for none")->capture_default_str();
  solve->add_option("--threads", s_threads, "Worker threads")->capture_default_str();
  solve->add_flag("--no-timings", s_no_timings, "Omit wall clock fields");
  solve->add_flag("--no-eval", s_no_eval, "Skip the full-resolution re-scoring");
  solve->add_option("-o,--out", s_out, "Report JSON (stdout if omitted)");
  solve->add_option("--allocation-out", s_alloc_out, "Write the allocation JSON");

  // eval
  auto* eval = app.add_subcommand("eval", "Re-score allocations on the full instance");
  std::string e_instance, e_dump, e_csv;
  std::vector<std::string> e_allocs;
  eval->add_option("--instance", e_instance, "Full instance JSON")->required();
  eval->add_option("--allocation", e_allocs, "Allocation JSON, optionally label=path")->required();
  eval->add_option("--csv", e_csv, "Comparison CSV path (stdout if omitted)");
  eval->add_option("--dump-dispatch", e_dump, "Write per-triple responders of the first allocation as JSON");

  // suite
  auto* suite = app.add_subcommand("suite", "Variant and zone-count grid over several seeds");
  std::string u_instance, u_profile = "paper", u_catalog, u_variants, u_zones, u_out = "rcap-suite",
                          u_link = "aggregated";
  int u_seeds = 10, u_threads = 1;
  std::uint64_t u_first_seed = 1, u_nodes = 0;
  double u_time = 600.0;
  bool u_no_timings = false;
  suite->add_option("--instance", u_instance, "Instance JSON; seeds then vary the clustering only");
  suite->add_option("--profile", u_profile, "Generate one instance per seed")->capture_default_str();
  suite->add_option("--catalog", u_catalog, "Catalog JSON for generation");
  suite->add_option("--variants", u_variants, "Comma-separated variants (default: all three)");
  suite->add_option("--zones", u_zones, "Comma-separated zone counts applied to every variant");
  suite->add_option("--seeds", u_seeds, "Number of seeds")->capture_default_str();
  suite->add_option("--first-seed", u_first_seed, "First seed")->capture_default_str();
  suite->add_option("--time-limit", u_time, "Seconds per solve")->capture_default_str();
  suite->add_option("--node-limit", u_nodes, "Nodes per solve, 0 for none")->capture_default_str();
  suite->add_option("--threads", u_threads, "Worker threads per solve")->capture_default_str();
  suite->add_option("--link-form", u_link, "Link rows counted in the model size")->capture_default_str();
  suite->add_flag("--no-timings", u_no_timings, "Leave wall clock columns empty");
  suite->add_option("-o,--out", u_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) {
      const rcap::Catalog catalog = load_catalog(gen_catalog);
      rcap::Profile profile = rcap::profile_by_name(gen_profile);
      if (gen_zones > 0) profile.zones = gen_zones;
      std::optional<std::vector<rcap::tides::GaugeSeries>> files;
      if (!gen_gauge_dir.empty()) files = align_all(read_gauge_dir(gen_gauge_dir, catalog), profile.tide_step_s);
      const rcap::GeneratedInstance g =
          files ? rcap::generate_instance(profile, catalog, gen_seed, std::span<const rcap::tides::GaugeSeries>(*files))
                : rcap::generate_instance(profile, catalog, gen_seed);
      write_or_print(gen_out, rcap::io::instance_to_json(g.instance));
      if (!gen_gauges_out.empty()) {
        fs::create_directories(gen_gauges_out);
        for (const auto& s : g.gauges) {
          rcap::io::write_text_file((fs::path(gen_gauges_out) / (s.gauge_id + ".csv")).string(),
                                    rcap::tides::write_gauge_csv(s));
        }
      }
      if (!gen_geojson.empty()) {
        rcap::io::write_text_file(gen_geojson,
                                  rcap::io::allocation_geojson(g.instance, rcap::Allocation(g.instance.num_stations())));
      }
      for (const std::string& w : rcap::instance_warnings(g.instance)) std::cerr << "warning: " << w << "\n";
      std::cerr << fmt::format("{} vessel types, {} stations, {} zones, {} tidal states\n", g.instance.num_vessels(),
                               g.instance.num_stations(), g.instance.num_zones(), g.instance.tidal.size());
      return kExitOk;
    }

    if (*fetch) {
      std::string endpoint = fetch_endpoint;
      if (endpoint.empty()) {
        const char* env = std::getenv(rcap::tides::kGaugeEndpointEnv);
        if (env == nullptr || *env == '\0') {
          throw rcap::ConfigurationError(
              fmt::format("no endpoint: pass --endpoint or set {}", rcap::tides::kGaugeEndpointEnv));
        }
        endpoint = env;
      }
      const auto series = rcap::tides::fetch_gauge_series(endpoint, fetch_gauge, rcap::tides::parse_iso8601(fetch_from),
                                                          rcap::tides::parse_iso8601(fetch_to));
      write_or_print(fetch_out, rcap::tides::write_gauge_csv(series));
      std::cerr << fmt::format("{} samples\n", series.size());
      return kExitOk;
    }

    if (*derive) {
      rcap::Instance inst = rcap::io::read_instance(derive_instance);
      const rcap::Catalog catalog = load_catalog(derive_catalog);
      const auto gauges = align_all(read_gauge_dir(derive_dir, catalog), derive_step);
      rcap::apply_gauges(inst, gauges);
      write_or_print(derive_out, rcap::io::instance_to_json(inst));
      if (!derive_corr.empty()) {
        const auto corr = rcap::tides::correlation_matrix(gauges);
        std::string csv = "gauge";
        for (const auto& g : gauges) csv += "," + g.gauge_id;
        csv += "\n";
        for (std::size_t a = 0; a < gauges.size(); ++a) {
          csv += gauges[a].gauge_id;
          for (std::size_t b = 0; b < gauges.size(); ++b) {
            const auto v = corr.at(a, b);
            csv += v ? fmt::format(",{:.6f}", *v) : std::string(",");
          }
          csv += "\n";
        }
        rcap::io::write_text_file(derive_corr, csv);
      }
      std::cerr << fmt::format("{} tidal states from {} gauges\n", inst.tidal.size(), gauges.size());
      return kExitOk;
    }

    if (*cluster) {
      const rcap::Instance full = rcap::io::read_instance(cl_instance);
      const auto c = rcap::geo::cluster_zones(full.zones, cl_zones, cl_seed);
      write_or_print(cl_out, rcap::io::instance_to_json(rcap::geo::clustered_instance(full, c)));
      if (!cl_geojson.empty()) rcap::io::write_text_file(cl_geojson, rcap::io::clustering_geojson(c));
      std::cerr << fmt::format("{} zones into {} clusters after {} iterations\n", full.num_zones(), cl_zones,
                               c.iterations);
      return kExitOk;
    }

    if (*build) {
      const rcap::Instance full = rcap::io::read_instance(b_instance);
      const Reduced r = reduce(full, b_zones, b_seed);
      const rcap::ModelVariant variant = rcap::make_variant(r.instance, rcap::parse_variant(b_variant));
      const rcap::LinkForm link = rcap::parse_link_form(b_link);
      if (b_lp.empty()) {
        print_size(rcap::model_size(r.instance, variant, link));
        return kExitOk;
      }
      const rcap::IpModel model = rcap::build_model(r.instance, variant, link);
      std::ofstream out(b_lp, std::ios::binary | std::ios::trunc);
      if (!out) throw rcap::Error(fmt::format("cannot write {}", b_lp));
      rcap::export_lp(model.lp, out, fmt::format("rcap {} {}", b_variant, b_link));
      print_size(model.size);
      return kExitOk;
    }

    if (*solve) {
      const rcap::Instance full = rcap::io::read_instance(s_instance);
      const Reduced r = reduce(full, s_zones, s_seed);
      const rcap::VariantTag tag = rcap::parse_variant(s_variant);
      const auto started = std::chrono::steady_clock::now();
      const rcap::ModelVariant variant = rcap::make_variant(r.instance, tag);
      rcap::io::ReportExtras extras;
      extras.model_size = rcap::model_size(r.instance, variant, rcap::LinkForm::kAggregated);
      extras.build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      extras.zones = r.instance.num_zones();
      extras.seed = s_seed;
      extras.timings = !s_no_timings;
      rcap::SolveLimits limits;
      limits.time_limit_s = s_time;
      limits.node_limit = s_nodes;
      limits.threads = s_threads;
      const rcap::SolveReport report = rcap::solve_cavabb(r.instance, variant, limits);
      if (report.objective && !s_no_eval) extras.full_resolution = rcap::full_resolution_objective(full, report.allocation);
      write_or_print(s_out, rcap::io::report_to_json(report, r.instance, extras));
      if (!s_alloc_out.empty()) {
        rcap::io::write_text_file(s_alloc_out, rcap::io::allocation_to_json(report.allocation, full));
      }
      std::cerr << fmt::format("{}: {} after {} nodes\n", rcap::to_string(report.status),
                               report.objective ? fmt::format("{:.9g}", *report.objective) : std::string("-"),
                               report.nodes);
      if (!report.uncoverable.empty()) {
        std::cerr << fmt::format("{} triples cannot be served by any placement\n", report.uncoverable.size());
      }
      return exit_code(report.status);
    }

    if (*eval) {
      const rcap::Instance full = rcap::io::read_instance(e_instance);
      std::vector<std::pair<std::string, rcap::Allocation>> entries;
      for (const std::string& spec : e_allocs) {
        const auto eq = spec.find('=');
        const std::string label = eq == std::string::npos ? fs::path(spec).stem().string() : spec.substr(0, eq);
        const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
        entries.emplace_back(label, rcap::io::allocation_from_json(rcap::io::read_text_file(path), full.num_stations()));
      }
      const rcap::FullResolutionEvaluator evaluator(full);
      std::vector<rcap::ComparisonRow> rows;
      bool gaps = false;
      for (std::size_t a = 0; a < entries.size(); ++a) {
        rcap::Evaluation e = evaluator.evaluate(entries[a].second, a == 0 && !e_dump.empty());
        gaps = gaps || !e.uncovered.empty();
        if (e.plan) rcap::io::write_text_file(e_dump, dispatch_json(full, entries[a].second, *e.plan));
        rows.push_back({entries[a].first, e.objective, e.uncovered.size(), std::move(e.per_incident)});
      }
      write_or_print(e_csv, rcap::comparison_csv(full, rows));
      return gaps ? kExitInfeasible : kExitOk;
    }

    if (*suite) {
      std::vector<rcap::VariantTag> variants;
      for (const std::string& v : split_list(u_variants)) variants.push_back(rcap::parse_variant(v));
      std::vector<int> zones;
      for (const std::string& z : split_list(u_zones)) zones.push_back(std::stoi(z));
      std::vector<rcap::SuiteRun> grid;
      if (zones.empty()) {
        for (const rcap::SuiteRun& run : rcap::default_suite_grid()) {
          if (variants.empty() || std::find(variants.begin(), variants.end(), run.variant) != variants.end()) {
            grid.push_back(run);
          }
        }
      } else {
        if (variants.empty()) {
          variants = {rcap::VariantTag::kManyZones, rcap::VariantTag::kBetterTidal, rcap::VariantTag::kBestTidal};
        }
        for (rcap::VariantTag v : variants) {
          for (int k : zones) grid.push_back({v, k});
        }
      }
      rcap::SolveLimits limits;
      limits.time_limit_s = u_time;
      limits.node_limit = u_nodes;
      limits.threads = u_threads;
      const rcap::LinkForm link = rcap::parse_link_form(u_link);

      std::optional<rcap::Instance> given;
      if (!u_instance.empty()) given = rcap::io::read_instance(u_instance);
      const rcap::Catalog catalog = load_catalog(u_catalog);
      const rcap::Profile profile = rcap::profile_by_name(u_profile);

      const fs::path root(u_out);
      fs::create_directories(root / "reports");
      fs::create_directories(root / "allocations");
      std::string summary = rcap::suite_csv_header();
      std::string comparison;
      bool any_limit = false, any_failed = false;
      for (int s = 0; s < u_seeds; ++s) {
        const std::uint64_t seed = u_first_seed + static_cast<std::uint64_t>(s);
        const rcap::Instance full = given ? *given : rcap::generate_instance(profile, catalog, seed).instance;
        const auto results = rcap::solve_variant_suite(full, grid, seed, limits, link);
        std::vector<rcap::ComparisonRow> rows;
        for (const rcap::SuiteResult& r : results) {
          const std::string label = fmt::format("{}-{}-{}", seed, rcap::to_string(r.run.variant), r.run.zones);
          summary += rcap::suite_csv_row(r, !u_no_timings);
          if (!r.report) {
            any_failed = true;
            std::cerr << fmt::format("{}: {}\n", label, r.error);
            continue;
          }
          any_limit = any_limit || r.report->status == rcap::SolveStatus::kLimitReached;
          any_failed = any_failed || r.report->status == rcap::SolveStatus::kInfeasible;
          rcap::io::ReportExtras extras;
          extras.zones = r.run.zones;
          extras.seed = seed;
          extras.model_size = r.size;
          extras.build_seconds = r.build_seconds;
          extras.full_resolution = r.full;
          extras.timings = !u_no_timings;
          const rcap::Instance reduced = rcap::geo::clustered_instance(full, r.clustering);
          rcap::io::write_text_file((root / "reports" / (label + ".json")).string(),
                                    rcap::io::report_to_json(*r.report, reduced, extras));
          rcap::io::write_text_file((root / "allocations" / (label + ".geojson")).string(),
                                    rcap::io::allocation_geojson(full, r.report->allocation, r.clustering.centroids));
          if (r.full) rows.push_back({label, r.full->objective, r.full->uncovered.size(), r.full->per_incident});
          std::cerr << fmt::format("{}: {}\n", label, rcap::to_string(r.report->status));
        }
        const std::string table = rcap::comparison_csv(full, rows);
        comparison += comparison.empty() ? table : table.substr(table.find('\n') + 1);
      }
      rcap::io::write_text_file((root / "summary.csv").string(), summary);
      rcap::io::write_text_file((root / "comparison.csv").string(), comparison);
      if (any_failed) return kExitInfeasible;
      return any_limit ? kExitLimit : kExitOk;
    }
  } catch (const rcap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
