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

// Model variants and closest-responder dispatch.
//
// A variant fixes the scenario axis: explicit tidal states weighted by p_e
// (best-tidal), or availability intervals weighted by their width with a
// pair gate on w_ji (better-tidal) or a station gate on w_j (many-zones).
// For a fixed allocation, the responder of every (incident, zone, scenario)
// triple is an independent argmin of d_jr / v_i, so dispatch needs no search.

#ifndef RCAP_DISPATCH_HPP_
#define RCAP_DISPATCH_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "rcap/bitset.hpp"
#include "rcap/model.hpp"
#include "rcap/tides.hpp"

namespace rcap {

enum class VariantTag { kBestTidal, kBetterTidal, kManyZones };

std::string_view to_string(VariantTag tag);
// Accepts "best-tidal", "better-tidal" and "many-zones". Throws ParameterError.
VariantTag parse_variant(std::string_view text);

struct ModelVariant {
  VariantTag tag = VariantTag::kBestTidal;
  // Weight per scenario element: p_e, or max(t) - min(t) for intervals.
  std::vector<double> weights;
  // Scenario mask per (station, vessel), station-major.
  std::vector<Bitset> operable;
  // Interval axis; empty for best-tidal.
  tides::IntervalSet intervals;
  int stations = 0;
  int vessels = 0;

  int scenarios() const { return static_cast<int>(weights.size()); }
  const Bitset& operable_mask(int station, int vessel) const {
    return operable[static_cast<std::size_t>(station) * vessels + vessel];
  }
  bool is_operable(int station, int vessel, int scenario) const {
    return operable_mask(station, vessel).test(static_cast<std::size_t>(scenario));
  }
};

// Scenario axis of |tag|. Interval variants gate (j, i) into interval t when
// its availability is at least max(t). Throws ConfigurationError if an
// interval variant is requested without a profile, and DivisionByZeroError
// for many-zones with an empty fleet.
ModelVariant make_variant(const Instance& instance, VariantTag tag,
                          const tides::AvailabilityProfile* profile);

// Same, computing the availability profile from the instance tidal set.
ModelVariant make_variant(const Instance& instance, VariantTag tag);

struct DispatchResult {
  // Absent when some triple that is coverable in principle has no responder.
  std::optional<double> objective;
  // Objective summed over the served triples only.
  double covered_objective = 0.0;
  TripleMask unserved;  // triples coverable in principle but not served
  std::size_t unserved_count = 0;
  std::vector<double> per_incident;
  std::optional<DispatchPlan> plan;
};

// Precomputed responder candidates for one instance and variant.
//
// Per zone, the (station, vessel) pairs with a_i > 0, (i, j) in C and (i, j, r) in S
// are sorted by travel time, then station, then vessel. The context keeps
// references to |instance| and |variant|; both must outlive it.
class DispatchContext {
 public:
  DispatchContext(const Instance& instance, const ModelVariant& variant);

  struct Candidate {
    int station;
    int vessel;
    double hours;
  };

  const Instance& instance() const { return instance_; }
  const ModelVariant& variant() const { return variant_; }
  const std::vector<Candidate>& candidates(int zone) const { return candidates_[zone]; }

  // q_kr * s_k.
  double factor(int incident, int zone) const {
    return factor_[static_cast<std::size_t>(incident) * zones_ + zone];
  }

  // Triples that some placement could serve.
  const TripleMask& coverable() const { return coverable_; }
  bool fully_coverable() const { return coverable_.count() == coverable_.capacity(); }

  DispatchResult dispatch(const Allocation& alloc, bool with_plan = false) const;

  // Objective if every station in |alive| held every vessel type i with
  // alive(j, i) true at once; +infinity if some triple stays unserved.
  // |alive| is indexed station-major like ModelVariant::operable.
  double optimistic_value(const std::vector<std::uint8_t>& alive) const;

  // Objective of a complete allocation given as vessel per station (-1 for
  // empty); +infinity if infeasible.
  double allocation_value(const std::vector<int>& vessel_at) const;

  // Unserved coverable triples and objective, for ranking infeasible
  // allocations during local search.
  std::pair<std::size_t, double> allocation_score(const std::vector<int>& vessel_at) const;

 private:
  template <typename Alive, typename OnServe>
  bool walk(int incident, int zone, const Alive& alive, Bitset& unserved, CompensatedSum& hours,
            const OnServe& on_serve) const;

  const Instance& instance_;
  const ModelVariant& variant_;
  int incidents_ = 0;
  int zones_ = 0;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<double> factor_;
  TripleMask coverable_;
};

// Dispatch on a fresh context.
DispatchResult optimal_dispatch(const Instance& instance, const ModelVariant& variant,
                                const Allocation& alloc, bool with_plan = true);

}  // namespace rcap

#endif  // RCAP_DISPATCH_HPP_
