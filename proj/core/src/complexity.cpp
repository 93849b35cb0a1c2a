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

#include "rcap/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rcap/errors.hpp"

namespace rcap {

void validate_x3c(const X3cInstance& x3c) {
  if (x3c.universe < 0 || x3c.universe % 3 != 0) {
    throw MalformedInputError(fmt::format("universe size {} is not a multiple of 3", x3c.universe));
  }
  for (std::size_t d = 0; d < x3c.triples.size(); ++d) {
    const auto& t = x3c.triples[d];
    for (int e : t) {
      if (e < 0 || e >= x3c.universe) {
        throw MalformedInputError(fmt::format("triple {} has element {} outside 1..{}", d + 1, e + 1,
                                              x3c.universe));
      }
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      throw MalformedInputError(fmt::format("triple {} repeats an element", d + 1));
    }
  }
}

Instance x3c_reduce(const X3cInstance& x3c, ReductionVariant variant) {
  validate_x3c(x3c);
  const int z = x3c.universe;
  const int m = static_cast<int>(x3c.triples.size());
  const int q = x3c.q();

  Instance out;
  const bool speed = variant == ReductionVariant::kSpeed;
  out.vessels = {{"I", 1.0, 1.0, q, 4.0, {}}, {"II", speed ? 0.5 : 1.0, 1.0, std::max(0, m - q), 4.0, {}}};
  for (int j = 0; j < m; ++j) out.stations.push_back({fmt::format("D{}", j + 1), {}, 0.0});
  for (int r = 0; r < z; ++r) out.zones.push_back({{}, {1.0}});
  out.incident_types = {{"incident", 1.0, {}}};
  out.relations = CompatibilityRelations(2, m, 1, z);
  out.distances = Matrix<double>(static_cast<std::size_t>(m), static_cast<std::size_t>(z), 1.0);
  for (int i = 0; i < 2; ++i) {
    out.relations.set_equipped(i, 0);
    for (int j = 0; j < m; ++j) out.relations.set_placeable(i, j);
  }
  for (int j = 0; j < m; ++j) {
    const auto& t = x3c.triples[j];
    for (int r = 0; r < z; ++r) {
      const bool member = std::find(t.begin(), t.end(), r) != t.end();
      if (speed) {
        out.distances(j, r) = member ? 1.0 : 2.0;
        out.relations.set_reaches(0, j, r);
        out.relations.set_reaches(1, j, r);
      } else if (member) {
        out.relations.set_reaches(0, j, r);
      }
    }
  }
  out.tidal = TidalStateSet::single_full(m, 2);
  return out;
}

Allocation x3c_witness(const X3cInstance& x3c, const std::vector<int>& cover) {
  const int m = static_cast<int>(x3c.triples.size());
  Allocation alloc(m);
  for (int j = 0; j < m; ++j) alloc.assign(j, 1);
  for (int d : cover) alloc.assign(d, 0);
  return alloc;
}

BruteForceResult brute_force_solve(const Instance& instance, const ModelVariant& variant) {
  const int m = instance.num_stations();
  const int n = instance.num_vessels();
  double space = 1.0;
  std::vector<std::vector<int>> options(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    options[j].push_back(-1);
    for (int i = 0; i < n; ++i) {
      if (instance.relations.placeable(i, j) && instance.vessels[i].count > 0) options[j].push_back(i);
    }
    space *= static_cast<double>(options[j].size());
  }
  if (space > static_cast<double>(kBruteForceGuard)) {
    throw TooLargeError(fmt::format("brute force would enumerate {:.3g} allocations", space));
  }

  const DispatchContext context(instance, variant);
  BruteForceResult out;
  out.allocation = Allocation(m);
  if (!context.fully_coverable()) return out;

  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) remaining[i] = instance.vessels[i].count;
  std::vector<int> current(static_cast<std::size_t>(m), -1);
  std::vector<int> best;
  bool found = false;
  double best_value = std::numeric_limits<double>::infinity();

  auto recurse = [&](auto&& self, int j) -> void {
    if (j == m) {
      ++out.evaluated;
      const double v = context.allocation_value(current);
      if (std::isfinite(v) && (!found || v < best_value - 1e-12 * std::max(1.0, std::abs(best_value)))) {
        best_value = v;
        best = current;
        found = true;
      }
      return;
    }
    for (int i : options[j]) {
      if (i >= 0) {
        if (remaining[i] == 0) continue;
        --remaining[i];
      }
      current[j] = i;
      self(self, j + 1);
      if (i >= 0) ++remaining[i];
    }
    current[j] = -1;
  };
  recurse(recurse, 0);

  if (found) {
    out.objective = best_value;
    for (int j = 0; j < m; ++j) {
      if (best[j] >= 0) out.allocation.assign(j, best[j]);
    }
  }
  return out;
}

BruteForceResult brute_force_solve(const Instance& instance, VariantTag tag) {
  const ModelVariant variant = make_variant(instance, tag);
  return brute_force_solve(instance, variant);
}

}  // namespace rcap
