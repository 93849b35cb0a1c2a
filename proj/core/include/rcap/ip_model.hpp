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

// Solver-agnostic integer program and CPLEX LP text I/O.
//
// Variables: x_i_j for (i, j) in C, and y_i_j_k_r_t for every dispatch option
// with (i, k) in B, (i, j, r) in S and (j, i) operable in scenario t.
// Rows:
//   c_k_r_t  sum of y over (i, j)                >= 1
//   l_i_j    sum of y over (k, r, t) - |Y_ij| x  <= 0   (aggregated)
//   l_i_j_k_r_t  y - x                           <= 0   (disaggregated)
//   f_i      sum of x over j                     <= a_i
//   s_j      sum of x over i                     <= 1

#ifndef RCAP_IP_MODEL_HPP_
#define RCAP_IP_MODEL_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rcap/dispatch.hpp"
#include "rcap/model.hpp"

namespace rcap {

enum class LinkForm { kAggregated, kDisaggregated };

std::string_view to_string(LinkForm form);
// "aggregated" or "disaggregated". Throws ParameterError.
LinkForm parse_link_form(std::string_view text);

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LpTerm {
  int var = 0;
  double coef = 0.0;
};

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// Minimization over binary variables.
struct LpModel {
  std::vector<std::string> names;
  std::vector<double> objective;
  std::vector<LpRow> rows;

  int add_variable(std::string name, double cost) {
    names.push_back(std::move(name));
    objective.push_back(cost);
    return static_cast<int>(names.size()) - 1;
  }
  std::size_t variables() const { return names.size(); }
};

struct ModelSize {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t cover_rows = 0;
  std::uint64_t link_rows = 0;
  std::uint64_t fleet_rows = 0;
  std::uint64_t station_rows = 0;

  std::uint64_t variables() const { return x + y; }
  std::uint64_t rows() const { return cover_rows + link_rows + fleet_rows + station_rows; }
};

struct IpModel {
  VariantTag variant = VariantTag::kBestTidal;
  LinkForm link = LinkForm::kAggregated;
  LpModel lp;
  ModelSize size;
};

// Counts of build_model without materializing it.
ModelSize model_size(const Instance& instance, const ModelVariant& variant, LinkForm link);

IpModel build_model(const Instance& instance, const ModelVariant& variant,
                    LinkForm link = LinkForm::kAggregated);

// Builds the variant first; interval variants need |profile| and throw
// ConfigurationError without it.
IpModel build_model(const Instance& instance, VariantTag tag,
                    const tides::AvailabilityProfile* profile,
                    LinkForm link = LinkForm::kAggregated);

// CPLEX LP dialect, coefficients with 17 significant digits. Throws Error if
// the stream fails.
void export_lp(const LpModel& model, std::ostream& out, std::string_view title = {});
std::string export_lp(const LpModel& model, std::string_view title = {});

// Reads the subset of the LP dialect written by export_lp. Variables are
// numbered in order of first appearance. Throws MalformedInputError.
LpModel parse_lp(std::string_view text);

}  // namespace rcap

#endif  // RCAP_IP_MODEL_HPP_
