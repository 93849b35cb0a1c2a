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

#include "rcap/ip_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "rcap/errors.hpp"

namespace rcap {
namespace {

constexpr int kTermsPerLine = 6;

std::uint64_t scenario_count(const Bitset& mask) { return mask.count(); }

void write_terms(std::ostream& out, const std::vector<LpTerm>& terms,
                 const std::vector<std::string>& names) {
  int on_line = 0;
  bool first = true;
  for (const LpTerm& t : terms) {
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const double mag = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      out << (t.coef < 0 ? " - " : " ");
    } else {
      out << (t.coef < 0 ? " - " : " + ");
    }
    out << fmt::format("{:.17g} {}", mag, names[t.var]);
    first = false;
    ++on_line;
  }
}

}  // namespace

std::string_view to_string(LinkForm form) {
  return form == LinkForm::kAggregated ? "aggregated" : "disaggregated";
}

LinkForm parse_link_form(std::string_view text) {
  if (text == "aggregated") return LinkForm::kAggregated;
  if (text == "disaggregated") return LinkForm::kDisaggregated;
  throw ParameterError(fmt::format("unknown link form '{}'", text));
}

ModelSize model_size(const Instance& instance, const ModelVariant& variant, LinkForm link) {
  const int n = instance.num_vessels();
  const int m = instance.num_stations();
  const auto& rel = instance.relations;
  ModelSize size;
  size.cover_rows = static_cast<std::uint64_t>(instance.num_incident_types()) *
                    static_cast<std::uint64_t>(instance.num_zones()) *
                    static_cast<std::uint64_t>(variant.scenarios());
  std::vector<bool> vessel_used(static_cast<std::size_t>(n)), station_used(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    std::uint64_t equipped = 0;
    for (int k = 0; k < instance.num_incident_types(); ++k) equipped += rel.equipped(i, k) ? 1 : 0;
    for (int j = 0; j < m; ++j) {
      if (!rel.placeable(i, j)) continue;
      ++size.x;
      vessel_used[i] = true;
      station_used[j] = true;
      std::uint64_t zones = 0;
      for (int r = 0; r < instance.num_zones(); ++r) zones += rel.reaches(i, j, r) ? 1 : 0;
      const std::uint64_t ys = equipped * zones * scenario_count(variant.operable_mask(j, i));
      size.y += ys;
      if (link == LinkForm::kAggregated) {
        size.link_rows += ys > 0 ? 1 : 0;
      } else {
        size.link_rows += ys;
      }
    }
  }
  size.fleet_rows = static_cast<std::uint64_t>(std::count(vessel_used.begin(), vessel_used.end(), true));
  size.station_rows = static_cast<std::uint64_t>(std::count(station_used.begin(), station_used.end(), true));
  return size;
}

IpModel build_model(const Instance& instance, const ModelVariant& variant, LinkForm link) {
  const int n = instance.num_vessels();
  const int m = instance.num_stations();
  const int f = instance.num_incident_types();
  const int z = instance.num_zones();
  const int T = variant.scenarios();
  const auto& rel = instance.relations;

  IpModel model;
  model.variant = variant.tag;
  model.link = link;
  LpModel& lp = model.lp;

  std::vector<std::vector<LpTerm>> cover(static_cast<std::size_t>(f) * z * T);
  std::vector<int> x_of(static_cast<std::size_t>(n) * m, -1);
  std::vector<LpRow> links;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!rel.placeable(i, j)) continue;
      const int x = lp.add_variable(fmt::format("x_{}_{}", i + 1, j + 1), 0.0);
      x_of[static_cast<std::size_t>(i) * m + j] = x;
      ++model.size.x;
      std::vector<LpTerm> ys;
      const Bitset& operable = variant.operable_mask(j, i);
      for (int k = 0; k < f; ++k) {
        if (!rel.equipped(i, k)) continue;
        const double severity = instance.incident_types[k].severity;
        for (int r = 0; r < z; ++r) {
          if (!rel.reaches(i, j, r)) continue;
          const double hours = instance.distances(j, r) / instance.vessels[i].speed_kn;
          const double q = instance.zones[r].frequencies.at(k);
          operable.for_each_set([&](std::size_t t) {
            const double cost = hours * q * variant.weights[t] * severity;
            const int y = lp.add_variable(
                fmt::format("y_{}_{}_{}_{}_{}", i + 1, j + 1, k + 1, r + 1, t + 1), cost);
            ys.push_back({y, 1.0});
            cover[(static_cast<std::size_t>(k) * z + r) * T + t].push_back({y, 1.0});
            if (link == LinkForm::kDisaggregated) {
              links.push_back({fmt::format("l_{}_{}_{}_{}_{}", i + 1, j + 1, k + 1, r + 1, t + 1),
                               {{y, 1.0}, {x, -1.0}},
                               RowSense::kLessEqual,
                               0.0});
            }
          });
        }
      }
      model.size.y += ys.size();
      if (link == LinkForm::kAggregated && !ys.empty()) {
        const double count = static_cast<double>(ys.size());
        ys.push_back({x, -count});
        links.push_back({fmt::format("l_{}_{}", i + 1, j + 1), std::move(ys), RowSense::kLessEqual, 0.0});
      }
    }
  }

  for (int k = 0; k < f; ++k) {
    for (int r = 0; r < z; ++r) {
      for (int t = 0; t < T; ++t) {
        lp.rows.push_back({fmt::format("c_{}_{}_{}", k + 1, r + 1, t + 1),
                           std::move(cover[(static_cast<std::size_t>(k) * z + r) * T + t]),
                           RowSense::kGreaterEqual, 1.0});
      }
    }
  }
  model.size.cover_rows = lp.rows.size();
  model.size.link_rows = links.size();
  for (LpRow& row : links) lp.rows.push_back(std::move(row));
  for (int i = 0; i < n; ++i) {
    LpRow row{fmt::format("f_{}", i + 1), {}, RowSense::kLessEqual,
              static_cast<double>(instance.vessels[i].count)};
    for (int j = 0; j < m; ++j) {
      if (x_of[static_cast<std::size_t>(i) * m + j] >= 0) {
        row.terms.push_back({x_of[static_cast<std::size_t>(i) * m + j], 1.0});
      }
    }
    if (!row.terms.empty()) {
      lp.rows.push_back(std::move(row));
      ++model.size.fleet_rows;
    }
  }
  for (int j = 0; j < m; ++j) {
    LpRow row{fmt::format("s_{}", j + 1), {}, RowSense::kLessEqual, 1.0};
    for (int i = 0; i < n; ++i) {
      if (x_of[static_cast<std::size_t>(i) * m + j] >= 0) {
        row.terms.push_back({x_of[static_cast<std::size_t>(i) * m + j], 1.0});
      }
    }
    if (!row.terms.empty()) {
      lp.rows.push_back(std::move(row));
      ++model.size.station_rows;
    }
  }
  return model;
}

IpModel build_model(const Instance& instance, VariantTag tag,
                    const tides::AvailabilityProfile* profile, LinkForm link) {
  const ModelVariant variant = make_variant(instance, tag, profile);
  return build_model(instance, variant, link);
}

void export_lp(const LpModel& model, std::ostream& out, std::string_view title) {
  if (!title.empty()) out << "\\ " << title << "\n";
  out << "Minimize\n obj:";
  std::vector<LpTerm> objective;
  for (std::size_t v = 0; v < model.objective.size(); ++v) {
    if (model.objective[v] != 0.0) objective.push_back({static_cast<int>(v), model.objective[v]});
  }
  if (objective.empty() && !model.names.empty()) objective.push_back({0, 0.0});
  write_terms(out, objective, model.names);
  out << "\nSubject To\n";
  for (const LpRow& row : model.rows) {
    out << " " << row.name << ":";
    if (row.terms.empty()) {
      // Row without variables keeps its index; it can only be satisfied if
      // the right-hand side allows zero.
      if (!model.names.empty()) write_terms(out, {{0, 0.0}}, model.names);
    } else {
      write_terms(out, row.terms, model.names);
    }
    const char* sense = row.sense == RowSense::kLessEqual      ? " <= "
                        : row.sense == RowSense::kGreaterEqual ? " >= "
                                                               : " = ";
    out << sense << fmt::format("{:.17g}", row.rhs) << "\n";
  }
  out << "Binaries\n";
  for (const std::string& name : model.names) out << " " << name << "\n";
  out << "End\n";
  if (!out) throw Error("failed to write LP output");
}

std::string export_lp(const LpModel& model, std::string_view title) {
  std::ostringstream out;
  export_lp(model, out, title);
  return out.str();
}

LpModel parse_lp(std::string_view text) {
  // Tokenize, dropping comments.
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (const std::size_t c = line.find('\\'); c != std::string_view::npos) line = line.substr(0, c);
    std::size_t a = 0;
    while (a < line.size()) {
      while (a < line.size() && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      std::size_t b = a;
      while (b < line.size() && !std::isspace(static_cast<unsigned char>(line[b]))) ++b;
      if (b > a) tokens.emplace_back(line.substr(a, b - a));
      a = b;
    }
  }

  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };
  auto parse_number = [](const std::string& s, double& value) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size();
  };

  LpModel model;
  std::unordered_map<std::string, int> index;
  auto var = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, static_cast<int>(model.names.size()));
    if (inserted) model.add_variable(name, 0.0);
    return it->second;
  };

  enum class Section { kNone, kObjective, kConstraints, kBinaries, kEnd };
  Section section = Section::kNone;
  std::size_t t = 0;
  auto is_section = [&](std::size_t at, Section& next, std::size_t& width) {
    const std::string tok = lower(tokens[at]);
    width = 1;
    if (tok == "minimize" || tok == "minimise" || tok == "min") {
      next = Section::kObjective;
    } else if (tok == "subject" && at + 1 < tokens.size() && lower(tokens[at + 1]) == "to") {
      next = Section::kConstraints;
      width = 2;
    } else if (tok == "st" || tok == "s.t.") {
      next = Section::kConstraints;
    } else if (tok == "binaries" || tok == "binary" || tok == "bin") {
      next = Section::kBinaries;
    } else if (tok == "end") {
      next = Section::kEnd;
    } else {
      return false;
    }
    return true;
  };
  auto is_sense = [](const std::string& s) {
    return s == "<=" || s == ">=" || s == "=" || s == "<" || s == ">" || s == "=<" || s == "=>";
  };

  // Reads "[name:] terms" up to a sense token or a section keyword.
  auto read_expression = [&](std::string& name, std::vector<LpTerm>& terms) {
    if (t < tokens.size() && tokens[t].size() > 1 && tokens[t].back() == ':') {
      name = tokens[t].substr(0, tokens[t].size() - 1);
      ++t;
    }
    double sign = 1.0;
    double coef = 1.0;
    bool have_coef = false;
    while (t < tokens.size()) {
      Section next;
      std::size_t width;
      if (is_sense(tokens[t]) || is_section(t, next, width)) break;
      const std::string& tok = tokens[t];
      if (tok == "+" || tok == "-") {
        if (tok == "-") sign = -sign;
        ++t;
        continue;
      }
      double value = 0.0;
      if (parse_number(tok, value)) {
        coef = value;
        have_coef = true;
        ++t;
        continue;
      }
      const int v = var(tok);
      if (coef != 0.0) terms.push_back({v, sign * coef});
      sign = 1.0;
      coef = 1.0;
      have_coef = false;
      ++t;
    }
    if (have_coef) throw MalformedInputError("LP expression ends with a dangling coefficient");
  };

  while (t < tokens.size() && section != Section::kEnd) {
    Section next;
    std::size_t width;
    if (is_section(t, next, width)) {
      section = next;
      t += width;
      continue;
    }
    switch (section) {
      case Section::kObjective: {
        std::string name;
        std::vector<LpTerm> terms;
        read_expression(name, terms);
        for (const LpTerm& term : terms) model.objective[term.var] += term.coef;
        break;
      }
      case Section::kConstraints: {
        LpRow row;
        read_expression(row.name, row.terms);
        if (t + 1 >= tokens.size() || !is_sense(tokens[t])) {
          throw MalformedInputError(fmt::format("LP row '{}' has no sense", row.name));
        }
        const std::string& s = tokens[t];
        row.sense = (s == "<=" || s == "<" || s == "=<")   ? RowSense::kLessEqual
                    : (s == ">=" || s == ">" || s == "=>") ? RowSense::kGreaterEqual
                                                           : RowSense::kEqual;
        if (!parse_number(tokens[t + 1], row.rhs)) {
          throw MalformedInputError(fmt::format("LP row '{}' has a bad right-hand side", row.name));
        }
        t += 2;
        model.rows.push_back(std::move(row));
        break;
      }
      case Section::kBinaries:
        var(tokens[t]);
        ++t;
        break;
      default:
        throw MalformedInputError(fmt::format("unexpected LP token '{}'", tokens[t]));
    }
  }
  if (section != Section::kEnd) throw MalformedInputError("LP text has no End");
  return model;
}

}  // namespace rcap
