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

// Exact Cover by 3-Sets reductions and an exhaustive optimum oracle.

#ifndef RCAP_COMPLEXITY_HPP_
#define RCAP_COMPLEXITY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rcap/dispatch.hpp"
#include "rcap/model.hpp"

namespace rcap {

// Universe {0, .., universe - 1}; triples hold distinct elements.
struct X3cInstance {
  int universe = 0;
  std::vector<std::array<int, 3>> triples;

  int q() const { return universe / 3; }
};

// Throws MalformedInputError.
void validate_x3c(const X3cInstance& x3c);

enum class ReductionVariant { kRange, kSpeed };

// One zone per element, one station per triple, a single incident type and a
// single full tidal state. Type I (count q) and type II (count |D| - q,
// clamped at zero) may be placed anywhere.
//
// Range: all distances 1, speeds 1; type I at station d reaches exactly the
// zones of d and type II reaches nothing.
// Speed: both types reach every zone, d_jr = 1 if element r is in triple j
// and 2 otherwise, v_I = 1 and v_II = 1/2. The optimum is at most 3q iff an
// exact cover exists.
Instance x3c_reduce(const X3cInstance& x3c, ReductionVariant variant);

// Type I on the stations of |cover|, type II on the rest.
Allocation x3c_witness(const X3cInstance& x3c, const std::vector<int>& cover);

inline constexpr std::uint64_t kBruteForceGuard = 10'000'000;

struct BruteForceResult {
  std::optional<double> objective;  // absent when infeasible
  Allocation allocation;
  std::uint64_t evaluated = 0;
};

// Enumerates every allocation respecting C, fleet counts and one vessel per
// station. Ties keep the lexicographically smallest vector (empty = 0,
// vessel i = i + 1). Throws TooLargeError when prod_j (1 + |C_j|) exceeds
// kBruteForceGuard.
BruteForceResult brute_force_solve(const Instance& instance, const ModelVariant& variant);
BruteForceResult brute_force_solve(const Instance& instance, VariantTag tag);

}  // namespace rcap

#endif  // RCAP_COMPLEXITY_HPP_
