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

#ifndef RCAP_TIDAL_STATE_HPP_
#define RCAP_TIDAL_STATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace rcap {

// Set of (station, vessel type) pairs that are operable at one instant.
class TidalPattern {
 public:
  TidalPattern() = default;
  TidalPattern(int stations, int vessels)
      : stations_(stations),
        vessels_(vessels),
        bits_(static_cast<std::size_t>(stations) * static_cast<std::size_t>(vessels), false) {}

  static TidalPattern full(int stations, int vessels) {
    TidalPattern p(stations, vessels);
    p.bits_.flip();
    return p;
  }

  int stations() const { return stations_; }
  int vessels() const { return vessels_; }

  bool operable(int station, int vessel) const { return bits_[offset(station, vessel)]; }
  void set(int station, int vessel, bool value = true) { bits_[offset(station, vessel)] = value; }

  // Number of operable pairs.
  std::size_t count() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }

  // Operable pairs as (station, vessel), station-major.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < stations_; ++j) {
      for (int i = 0; i < vessels_; ++i) {
        if (operable(j, i)) out.emplace_back(j, i);
      }
    }
    return out;
  }

  bool is_subset_of(const TidalPattern& other) const {
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      if (bits_[b] && !other.bits_[b]) return false;
    }
    return true;
  }

  std::size_t hash() const { return std::hash<std::vector<bool>>{}(bits_); }

  friend bool operator==(const TidalPattern&, const TidalPattern&) = default;

 private:
  std::size_t offset(int station, int vessel) const {
    return static_cast<std::size_t>(station) * static_cast<std::size_t>(vessels_) +
           static_cast<std::size_t>(vessel);
  }

  int stations_ = 0;
  int vessels_ = 0;
  std::vector<bool> bits_;
};

struct TidalState {
  TidalPattern pattern;
  double probability = 0.0;
  // Number of samples that produced this pattern; zero when the state was
  // specified by probability only.
  std::uint64_t occurrences = 0;
};

// The uncertainty set of tidal states together with their probabilities.
struct TidalStateSet {
  std::vector<TidalState> states;
  // Total number of samples behind |occurrences|; zero when unknown.
  std::uint64_t total_samples = 0;

  std::size_t size() const { return states.size(); }
  bool empty() const { return states.empty(); }

  static TidalStateSet single_full(int stations, int vessels) {
    TidalStateSet set;
    set.states.push_back({TidalPattern::full(stations, vessels), 1.0, 1});
    set.total_samples = 1;
    return set;
  }
};

}  // namespace rcap

template <>
struct std::hash<rcap::TidalPattern> {
  std::size_t operator()(const rcap::TidalPattern& p) const noexcept { return p.hash(); }
};

#endif  // RCAP_TIDAL_STATE_HPP_
