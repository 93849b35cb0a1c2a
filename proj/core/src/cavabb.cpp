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

#include "rcap/cavabb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "rcap/numeric.hpp"

namespace rcap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using Clock = std::chrono::steady_clock;

bool better(std::pair<std::size_t, double> a, std::pair<std::size_t, double> b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second - kTolerance;
}

// Vessel types placeable at each station, fastest first.
std::vector<std::vector<int>> branch_order(const Instance& instance) {
  std::vector<int> by_speed(static_cast<std::size_t>(instance.num_vessels()));
  for (int i = 0; i < instance.num_vessels(); ++i) by_speed[i] = i;
  std::stable_sort(by_speed.begin(), by_speed.end(), [&](int a, int b) {
    return instance.vessels[a].speed_kn > instance.vessels[b].speed_kn;
  });
  std::vector<std::vector<int>> out(static_cast<std::size_t>(instance.num_stations()));
  for (int j = 0; j < instance.num_stations(); ++j) {
    for (int i : by_speed) {
      if (instance.relations.placeable(i, j) && instance.vessels[i].count > 0) out[j].push_back(i);
    }
  }
  return out;
}

struct Shared {
  const DispatchContext& context;
  const std::vector<std::vector<int>>& order;
  Clock::time_point deadline{};
  std::uint64_t node_limit = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> time_hit{false};
  std::atomic<bool> node_hit{false};
  std::mutex mutex{};
  double global_best = kInf;

  double global() {
    std::lock_guard<std::mutex> lock(mutex);
    return global_best;
  }
  void offer(double value) {
    std::lock_guard<std::mutex> lock(mutex);
    global_best = std::min(global_best, value);
  }
  bool should_stop() {
    if (stop.load(std::memory_order_relaxed)) return true;
    const std::uint64_t count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_limit != 0 && count > node_limit) {
      node_hit = true;
      stop = true;
    } else if (Clock::now() >= deadline) {
      time_hit = true;
      stop = true;
    }
    return stop.load(std::memory_order_relaxed);
  }
};

struct Node {
  std::vector<std::uint8_t> alive;  // station-major (j, i)
  std::vector<int> remaining;
};

// Child of |parent| with station j holding |vessel| (-1 for empty).
Node child_of(const Node& parent, int j, int vessel, int m, int n) {
  Node c = parent;
  for (int i = 0; i < n; ++i) c.alive[static_cast<std::size_t>(j) * n + i] = i == vessel ? 1 : 0;
  if (vessel >= 0 && --c.remaining[vessel] == 0) {
    for (int jj = j + 1; jj < m; ++jj) c.alive[static_cast<std::size_t>(jj) * n + vessel] = 0;
  }
  return c;
}

class Subtree {
 public:
  Subtree(Shared& shared, double incumbent) : shared_(shared), own_(incumbent) {}

  void run(const Node& node, int depth, double bound, std::vector<int> assignment) {
    assign_ = std::move(assignment);
    dfs(node, depth, bound);
  }

  bool found() const { return found_; }
  double value() const { return own_; }
  const std::vector<int>& best() const { return best_; }
  double open_bound() const { return open_bound_; }

 private:
  void dfs(const Node& node, int depth, double bound) {
    if (shared_.should_stop()) {
      open_bound_ = std::min(open_bound_, bound);
      return;
    }
    const DispatchContext& ctx = shared_.context;
    const int m = ctx.instance().num_stations();
    const int n = ctx.instance().num_vessels();
    if (depth == m) {
      if (bound < own_ - kTolerance) {
        own_ = bound;
        best_ = assign_;
        found_ = true;
        shared_.offer(bound);
      }
      return;
    }
    const auto& types = shared_.order[depth];
    const std::size_t choices = types.size() + 1;
    for (std::size_t c = 0; c < choices; ++c) {
      const int vessel = c < types.size() ? types[c] : -1;
      if (vessel >= 0 && node.remaining[vessel] == 0) continue;
      const Node child = child_of(node, depth, vessel, m, n);
      const double b = ctx.optimistic_value(child.alive);
      if (b >= own_ - kTolerance || b > shared_.global() + kTolerance) continue;
      if (shared_.stop.load(std::memory_order_relaxed)) {
        open_bound_ = std::min(open_bound_, b);
        continue;
      }
      assign_[depth] = vessel;
      dfs(child, depth + 1, b);
    }
    assign_[depth] = -1;
  }

  Shared& shared_;
  double own_;
  std::vector<int> assign_;
  std::vector<int> best_;
  bool found_ = false;
  double open_bound_ = kInf;
};

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kLimitReached:
      return "time-limit-bound";
  }
  return "unknown";
}

std::optional<std::vector<int>> warm_start_allocation(const DispatchContext& context,
                                                      std::uint64_t max_evaluations) {
  const Instance& instance = context.instance();
  const int m = instance.num_stations();
  const auto order = branch_order(instance);
  std::vector<int> remaining(static_cast<std::size_t>(instance.num_vessels()));
  for (int i = 0; i < instance.num_vessels(); ++i) remaining[i] = instance.vessels[i].count;

  std::vector<int> current(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    for (int i : order[j]) {
      if (remaining[i] > 0) {
        current[j] = i;
        --remaining[i];
        break;
      }
    }
  }
  std::uint64_t evaluations = 1;
  auto score = context.allocation_score(current);

  bool improved = true;
  while (improved && evaluations < max_evaluations) {
    improved = false;
    for (int j = 0; j < m && evaluations < max_evaluations; ++j) {
      // Reassign station j.
      std::vector<int> options(order[j]);
      options.push_back(-1);
      for (int i : options) {
        if (i == current[j] || (i >= 0 && remaining[i] == 0)) continue;
        if (evaluations >= max_evaluations) break;
        const int old = current[j];
        current[j] = i;
        ++evaluations;
        const auto s = context.allocation_score(current);
        if (better(s, score)) {
          score = s;
          if (old >= 0) ++remaining[old];
          if (i >= 0) --remaining[i];
          improved = true;
        } else {
          current[j] = old;
        }
      }
      // Swap with a later station holding another type.
      for (int jj = j + 1; jj < m && evaluations < max_evaluations; ++jj) {
        const int a = current[j];
        const int b = current[jj];
        if (a == b) continue;
        if ((b >= 0 && !instance.relations.placeable(b, j)) ||
            (a >= 0 && !instance.relations.placeable(a, jj))) {
          continue;
        }
        std::swap(current[j], current[jj]);
        ++evaluations;
        const auto s = context.allocation_score(current);
        if (better(s, score)) {
          score = s;
          improved = true;
        } else {
          std::swap(current[j], current[jj]);
        }
      }
    }
  }
  if (score.first != 0) return std::nullopt;
  return current;
}

SolveReport solve_cavabb(const Instance& instance, const ModelVariant& variant,
                         const SolveLimits& limits) {
  const auto started = Clock::now();
  const int m = instance.num_stations();
  const int n = instance.num_vessels();
  SolveReport report;
  report.variant = variant.tag;
  report.allocation = Allocation(m);
  auto finish = [&]() {
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return report;
  };

  const DispatchContext context(instance, variant);
  if (!context.fully_coverable()) {
    report.status = SolveStatus::kInfeasible;
    report.lower_bound = kInf;
    report.uncoverable = context.coverable().complement();
    return finish();
  }

  double incumbent = kInf;
  bool have_incumbent = false;
  std::vector<int> incumbent_alloc;
  if (limits.warm_start) {
    if (auto warm = warm_start_allocation(context, limits.warm_start_evaluations)) {
      incumbent = context.allocation_value(*warm);
      incumbent_alloc = std::move(*warm);
      have_incumbent = true;
    }
  }

  const auto order = branch_order(instance);
  Shared shared{context, order, {}, 0};
  shared.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(std::max(0.0, limits.time_limit_s)));
  shared.node_limit = limits.node_limit;
  shared.global_best = incumbent;

  Node root;
  root.alive.assign(static_cast<std::size_t>(m) * n, 0);
  root.remaining.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    root.remaining[i] = instance.vessels[i].count;
    for (int j = 0; j < m; ++j) {
      if (instance.relations.placeable(i, j) && root.remaining[i] > 0) {
        root.alive[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  }

  struct Task {
    Node node;
    std::vector<int> assignment;
    double bound = kInf;
    bool started = false;
    bool found = false;
    double value = kInf;
    std::vector<int> best;
    double open_bound = kInf;
  };
  std::vector<Task> tasks;
  ++shared.nodes;
  if (m == 0) {
    Task t;
    t.node = root;
    t.bound = context.optimistic_value(root.alive);
    tasks.push_back(std::move(t));
  } else {
    std::vector<int> choices(order[0]);
    choices.push_back(-1);
    for (int vessel : choices) {
      Task t;
      t.node = child_of(root, 0, vessel, m, n);
      t.assignment.assign(static_cast<std::size_t>(m), -1);
      t.assignment[0] = vessel;
      t.bound = context.optimistic_value(t.node.alive);
      tasks.push_back(std::move(t));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      Task& t = tasks[idx];
      if (t.bound >= incumbent - kTolerance) continue;
      if (shared.stop.load()) {
        t.open_bound = t.bound;
        continue;
      }
      t.started = true;
      Subtree sub(shared, incumbent);
      sub.run(t.node, m == 0 ? 0 : 1, t.bound, t.assignment);
      t.found = sub.found();
      t.value = sub.value();
      t.best = sub.best();
      t.open_bound = sub.open_bound();
    }
  };
  const int threads = std::max(1, std::min<int>(limits.threads, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  double best = incumbent;
  bool have = have_incumbent;
  std::vector<int> best_alloc = incumbent_alloc;
  double open = kInf;
  for (const Task& t : tasks) {
    if (t.found && (!have || t.value < best - kTolerance)) {
      best = t.value;
      best_alloc = t.best;
      have = true;
    }
    open = std::min(open, t.open_bound);
  }

  report.nodes = shared.nodes.load();
  report.node_limit_hit = shared.node_hit.load();
  report.time_limit_hit = shared.time_hit.load();
  const bool stopped = shared.stop.load();
  if (have) {
    report.objective = best;
    for (int j = 0; j < m; ++j) {
      if (best_alloc[j] >= 0) report.allocation.assign(j, best_alloc[j]);
    }
  }
  if (!stopped) {
    report.status = report.objective ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    report.lower_bound = report.objective ? *report.objective : kInf;
  } else {
    report.status = SolveStatus::kLimitReached;
    report.lower_bound = std::min(best, open);
  }
  return finish();
}

SolveReport solve_cavabb(const Instance& instance, VariantTag tag, const SolveLimits& limits) {
  const ModelVariant variant = make_variant(instance, tag);
  return solve_cavabb(instance, variant, limits);
}

}  // namespace rcap
