// Copyright 2026 The optsort Authors
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

// Exact reference solvers and an LP model exporter.
//
// brute_force_optimum enumerates every order (with pruning on the accrued
// prefix cost) and is limited to small instances. branch_and_bound_optimum
// searches prefixes depth first and bounds the unscheduled jobs with the
// preemptive shortest-remaining-processing-time schedule from the current
// time: its total completion time is a lower bound for any non-preemptive
// completion of the prefix.

#ifndef OPTSORT_ORACLES_HPP_
#define OPTSORT_ORACLES_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

struct OracleResult {
  Time objective = 0;
  Sequence sequence;
  bool proved_optimal = false;
  std::int64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
};

inline constexpr int kBruteForceMaxJobs = 11;

namespace internal {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Non-delay dispatch: whenever the machine frees up, start the shortest
// released job, or the earliest-released one if none is waiting.
inline std::vector<JobId> dispatch_order(const Instance& inst) {
  const int n = inst.size();
  std::vector<bool> done(n + 1, false);
  std::vector<JobId> order;
  Time now = 0;
  for (int step = 0; step < n; ++step) {
    JobId pick = 0;
    for (JobId j = 1; j <= n; ++j) {
      if (done[j] || inst.release(j) > now) continue;
      if (pick == 0 || inst.processing(j) < inst.processing(pick)) pick = j;
    }
    if (pick == 0) {
      for (JobId j = 1; j <= n; ++j) {
        if (done[j]) continue;
        if (pick == 0 || inst.release(j) < inst.release(pick) ||
            (inst.release(j) == inst.release(pick) &&
             inst.processing(j) < inst.processing(pick))) {
          pick = j;
        }
      }
    }
    done[pick] = true;
    order.push_back(pick);
    now = std::max(now, inst.release(pick)) + inst.processing(pick);
  }
  return order;
}

}  // namespace internal

inline OracleResult brute_force_optimum(const Instance& inst) {
  const auto started = internal::Clock::now();
  const int n = inst.size();
  if (n > kBruteForceMaxJobs) {
    throw std::invalid_argument("brute force is limited to " +
                                std::to_string(kBruteForceMaxJobs) + " jobs");
  }
  OracleResult result;
  std::vector<JobId> best = internal::dispatch_order(inst);
  Time best_obj = objective_of(inst, best);
  std::vector<JobId> prefix;
  std::vector<bool> used(n + 1, false);

  auto search = [&](auto&& self, Time now, Time accrued) -> void {
    ++result.nodes_explored;
    if (static_cast<int>(prefix.size()) == n) {
      if (accrued < best_obj) {
        best_obj = accrued;
        best = prefix;
      }
      return;
    }
    for (JobId j = 1; j <= n; ++j) {
      if (used[j]) continue;
      const Time start = std::max(now, inst.release(j));
      const Time cost = accrued + (start - inst.release(j));
      if (cost >= best_obj) continue;
      used[j] = true;
      prefix.push_back(j);
      self(self, start + inst.processing(j), cost);
      prefix.pop_back();
      used[j] = false;
    }
  };
  search(search, 0, 0);

  result.objective = best_obj;
  result.sequence.order = best;
  result.proved_optimal = true;
  result.elapsed_ms = internal::ms_since(started);
  return result;
}

// Lower bound on the total waiting of `jobs` when none may start before
// `now`: preemptive SRPT with releases max(r, now) gives the least total
// completion time, and waiting is completion minus (r + p).
inline Time srpt_lower_bound(const Instance& inst,
                             const std::vector<JobId>& jobs, Time now) {
  const int m = static_cast<int>(jobs.size());
  if (m == 0) return 0;
  std::vector<Time> release(m);
  std::vector<Time> remaining(m);
  std::vector<int> by_release(m);
  Time base = 0;
  for (int a = 0; a < m; ++a) {
    release[a] = std::max(inst.release(jobs[a]), now);
    remaining[a] = inst.processing(jobs[a]);
    base += inst.release(jobs[a]) + inst.processing(jobs[a]);
    by_release[a] = a;
  }
  std::sort(by_release.begin(), by_release.end(),
            [&](int a, int b) { return release[a] < release[b]; });

  Time t = release[by_release[0]];
  Time completion_sum = 0;
  int next = 0;
  int finished = 0;
  std::vector<int> ready;
  while (finished < m) {
    while (next < m && release[by_release[next]] <= t) {
      ready.push_back(by_release[next++]);
    }
    if (ready.empty()) {
      t = release[by_release[next]];
      continue;
    }
    auto it = std::min_element(ready.begin(), ready.end(), [&](int a, int b) {
      return remaining[a] < remaining[b];
    });
    const int a = *it;
    const Time horizon =
        next < m ? release[by_release[next]] : std::numeric_limits<Time>::max();
    const Time run = std::min(remaining[a], horizon - t);
    t += run;
    remaining[a] -= run;
    if (remaining[a] == 0) {
      completion_sum += t;
      ++finished;
      ready.erase(it);
    }
  }
  return completion_sum - base;
}

struct BranchAndBoundOptions {
  // 0 disables the limit.
  std::int64_t node_limit = 0;
  double time_limit_ms = 0.0;
  // Skip a released job when another released job has both smaller p and
  // smaller r.
  bool release_dominance = false;
  // Prune a prefix when another prefix over the same job set finished no
  // later with no more waiting.
  bool prefix_memo = true;
};

inline OracleResult branch_and_bound_optimum(
    const Instance& inst, const BranchAndBoundOptions& options = {}) {
  const auto started = internal::Clock::now();
  const int n = inst.size();
  if (n > 62) throw std::invalid_argument("branch and bound: n > 62");
  OracleResult result;
  std::vector<JobId> best = internal::dispatch_order(inst);
  Time best_obj = objective_of(inst, best);
  std::vector<JobId> prefix;
  std::vector<JobId> rest;
  std::uint64_t mask = 0;
  bool aborted = false;
  // For each scheduled set, (finish time, accrued) pairs seen so far that
  // are not dominated by one another.
  std::unordered_map<std::uint64_t, std::vector<std::pair<Time, Time>>> memo;

  auto dominated = [&](Time now, Time accrued) {
    auto& front = memo[mask];
    for (const auto& [t, a] : front) {
      if (t <= now && a <= accrued) return true;
    }
    std::erase_if(front, [&](const auto& e) {
      return now <= e.first && accrued <= e.second;
    });
    front.emplace_back(now, accrued);
    return false;
  };

  auto search = [&](auto&& self, Time now, Time accrued) -> void {
    if (aborted) return;
    ++result.nodes_explored;
    if ((options.node_limit > 0 &&
         result.nodes_explored > options.node_limit) ||
        (options.time_limit_ms > 0 && (result.nodes_explored & 1023) == 0 &&
         internal::ms_since(started) > options.time_limit_ms)) {
      aborted = true;
      return;
    }
    if (static_cast<int>(prefix.size()) == n) {
      if (accrued < best_obj) {
        best_obj = accrued;
        best = prefix;
      }
      return;
    }
    rest.clear();
    for (JobId j = 1; j <= n; ++j) {
      if (!(mask >> j & 1)) rest.push_back(j);
    }
    if (accrued + srpt_lower_bound(inst, rest, now) >= best_obj) return;
    if (options.prefix_memo && !prefix.empty() && dominated(now, accrued)) {
      return;
    }

    // Children by earliest start, then shortest processing.
    std::vector<JobId> children = rest;
    std::sort(children.begin(), children.end(), [&](JobId a, JobId b) {
      const Time sa = std::max(now, inst.release(a));
      const Time sb = std::max(now, inst.release(b));
      if (sa != sb) return sa < sb;
      if (inst.processing(a) != inst.processing(b)) {
        return inst.processing(a) < inst.processing(b);
      }
      return a < b;
    });
    for (JobId j : children) {
      if (options.release_dominance && inst.release(j) <= now) {
        const bool beaten = std::any_of(
            children.begin(), children.end(), [&](JobId o) {
              return o != j && inst.release(o) <= now &&
                     inst.processing(o) < inst.processing(j) &&
                     inst.release(o) < inst.release(j);
            });
        if (beaten) continue;
      }
      const Time start = std::max(now, inst.release(j));
      const Time cost = accrued + (start - inst.release(j));
      if (cost >= best_obj) continue;
      mask |= std::uint64_t{1} << j;
      prefix.push_back(j);
      self(self, start + inst.processing(j), cost);
      prefix.pop_back();
      mask &= ~(std::uint64_t{1} << j);
      if (aborted) return;
    }
  };
  search(search, 0, 0);

  result.objective = best_obj;
  result.sequence.order = best;
  result.proved_optimal = !aborted;
  result.elapsed_ms = internal::ms_since(started);
  return result;
}

// Auto big-M: no job in an optimal schedule starts after max r + sum p.
inline Time default_big_m(const Instance& inst) {
  return inst.max_release() + inst.total_processing();
}

// Disjunctive model in LP text format: start times S_i >= r_i, waits
// w_i >= S_i - r_i, and for each pair i < j a binary x_i_j selecting which
// job goes first.
inline std::string export_milp(const Instance& inst,
                               std::optional<Time> big_m = std::nullopt) {
  const int n = inst.size();
  const Time m = big_m.value_or(default_big_m(inst));
  auto s = [](int i) { return "S_" + std::to_string(i); };
  auto w = [](int i) { return "w_" + std::to_string(i); };
  auto x = [](int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
  };

  std::string out = "\\ total waiting time, " + std::to_string(n) +
                    " jobs, big-M " + std::to_string(m) + "\n";
  out += "Minimize\n obj:";
  for (int i = 1; i <= n; ++i) out += (i == 1 ? " " : " + ") + w(i);
  out += "\nSubject To\n";
  for (int i = 1; i <= n; ++i) {
    out += " wait_" + std::to_string(i) + ": " + w(i) + " - " + s(i) +
           " >= " + std::to_string(-inst.release(i)) + "\n";
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::string tag = std::to_string(i) + "_" + std::to_string(j);
      // x = 1: i before j.
      out += " before_" + tag + ": " + s(i) + " - " + s(j) + " + " +
             std::to_string(m) + " " + x(i, j) +
             " <= " + std::to_string(m - inst.processing(i)) + "\n";
      out += " after_" + tag + ": " + s(j) + " - " + s(i) + " - " +
             std::to_string(m) + " " + x(i, j) +
             " <= " + std::to_string(-inst.processing(j)) + "\n";
    }
  }
  out += "Bounds\n";
  for (int i = 1; i <= n; ++i) {
    out += " " + s(i) + " >= " + std::to_string(inst.release(i)) + "\n";
  }
  out += "Binaries\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out += " " + x(i, j) + "\n";
  }
  out += "End\n";
  return out;
}

}  // namespace optsort

#endif  // OPTSORT_ORACLES_HPP_
