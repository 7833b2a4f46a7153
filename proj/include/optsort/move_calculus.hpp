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

// Closed-form objective change of relocating a single job.
//
// Forward move (i < k): the job at position i is reinserted immediately after
// the job at position k. Jobs i+1..k lose its processing time (a decreasing
// flow seeded with p_i - min(0, w_i)), the mover picks up a new wait, and the
// tail k+1..n receives the signed shift I2 of the mover's completion.
//
//   delta = I1 + I2 + flow(k+1, I2)
//   I1    = sum_{j=i+1..k} (p_j - min(0, w_j)) - sum_{j=i+2..k+1} dec_j
//   I2    = p_i                                   if some w_j <= 0, j in i+1..k
//         = max(min(0, w_i), -sum p_j, max_j (p_i - w_j))   otherwise
//
// Backward move (k < i): the job at position i is reinserted immediately
// before the job at position k. Jobs k..i-1 receive an increasing flow seeded
// with max(p_i, sum_{k..i} p - sum_{k..i-1} min(0, w) - w_i), and the tail
// i+1..n receives the signed shift I4.
//
//   delta = I3 + I4 + flow(i+1, I4)
//   I3    = sum_{j=k..i-1} (min(0, w_j) - p_j) + sum_{j=k..i-1} inc_j
//   I4    = max(-p_i, sum_{j=k..i-1} min(0, w_j),
//               sum_{j=k..i-1} p_j - max(0, w_i))
//
// All quantities are exact integers; delta equals the recomputed objective
// difference for every admissible (i, k) of any profile.

#ifndef OPTSORT_MOVE_CALCULUS_HPP_
#define OPTSORT_MOVE_CALCULUS_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/propagation.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

enum class MoveDirection { kForward, kBackward };

struct MoveEvaluation {
  MoveDirection direction = MoveDirection::kForward;
  Position i = 0;
  Position k = 0;
  Time delta_total = 0;
  // I1 (forward) or I3 (backward).
  Time part_local = 0;
  // I2 (forward) or I4 (backward): signed shift handed to the tail.
  Time part_flow = 0;
  // Objective change of the tail flow.
  Time flow_tail = 0;
  // Signed wait of the moved job at its new position.
  Time new_wait = 0;
  // Flow injected into the jobs the mover passes: a decrease at i+1
  // (forward) or an increase at k (backward).
  Time seed = 0;
};

inline MoveEvaluation forward_move_delta(const WaitingProfile& prof, Position i,
                                         Position k) {
  const int n = prof.size();
  if (i < 1 || k <= i || k > n) {
    throw std::out_of_range("forward move needs 1 <= i < k <= n");
  }
  MoveEvaluation ev;
  ev.direction = MoveDirection::kForward;
  ev.i = i;
  ev.k = k;

  const Time p_mover = prof.p(i);
  const Time w_mover = prof.wait(i);
  ev.seed = p_mover - std::min<Time>(0, w_mover);
  const FlowTrace dec = propagate_decrease(prof, i + 1, ev.seed);

  Time block = 0;  // sum_{j=i+1..k} (p_j - min(0, w_j))
  Time block_p = 0;
  Time max_gap = 0;
  bool all_waiting = true;
  for (Position j = i + 1; j <= k; ++j) {
    block += prof.p(j) - std::min<Time>(0, prof.wait(j));
    block_p += prof.p(j);
    if (prof.wait(j) <= 0) all_waiting = false;
    const Time gap = p_mover - prof.wait(j);
    if (j == i + 1 || gap > max_gap) max_gap = gap;
  }
  Time released = 0;  // sum_{j=i+2..k+1} dec_j
  for (Position j = i + 2; j <= k + 1; ++j) released += dec.at(j);

  ev.part_local = block - released;
  ev.part_flow = all_waiting
                     ? std::max({std::min<Time>(0, w_mover), -block_p, max_gap})
                     : p_mover;
  ev.flow_tail = flow_objective_change(prof, k + 1, ev.part_flow);
  ev.delta_total = ev.part_local + ev.part_flow + ev.flow_tail;
  ev.new_wait = p_mover + block - dec.at(k + 1) + std::max<Time>(0, w_mover);
  return ev;
}

inline MoveEvaluation backward_move_delta(const WaitingProfile& prof,
                                          Position i, Position k) {
  const int n = prof.size();
  if (k < 1 || i <= k || i > n) {
    throw std::out_of_range("backward move needs 1 <= k < i <= n");
  }
  MoveEvaluation ev;
  ev.direction = MoveDirection::kBackward;
  ev.i = i;
  ev.k = k;

  const Time p_mover = prof.p(i);
  const Time w_mover = prof.wait(i);
  Time min_sum = 0;  // sum_{j=k..i-1} min(0, w_j)
  Time p_sum = 0;    // sum_{j=k..i-1} p_j
  for (Position j = k; j < i; ++j) {
    min_sum += std::min<Time>(0, prof.wait(j));
    p_sum += prof.p(j);
  }
  ev.seed = std::max(p_mover, p_sum + p_mover - min_sum - w_mover);
  const FlowTrace inc = propagate_increase(prof, k, ev.seed);
  Time pushed = 0;  // sum_{j=k..i-1} inc_j
  for (Position j = k; j < i; ++j) pushed += inc.at(j);

  ev.part_local = min_sum - p_sum + pushed;
  ev.part_flow =
      std::max({-p_mover, min_sum, p_sum - std::max<Time>(0, w_mover)});
  ev.flow_tail = flow_objective_change(prof, i + 1, ev.part_flow);
  ev.delta_total = ev.part_local + ev.part_flow + ev.flow_tail;
  ev.new_wait = min_sum - p_sum + w_mover;
  return ev;
}

inline MoveEvaluation move_delta(const WaitingProfile& prof, Position i,
                                 Position k, MoveDirection dir) {
  return dir == MoveDirection::kForward ? forward_move_delta(prof, i, k)
                                        : backward_move_delta(prof, i, k);
}

// Relocates the job at position i: forward reinserts it right after the job
// currently at k (k > i), backward right before it (k < i). The iteration
// counter is carried over.
inline Sequence apply_move(const Sequence& seq, Position i, Position k,
                           MoveDirection dir) {
  const int n = seq.size();
  const bool ok = dir == MoveDirection::kForward ? (1 <= i && i < k && k <= n)
                                                 : (1 <= k && k < i && i <= n);
  if (!ok) throw std::out_of_range("apply_move: invalid positions");
  Sequence out = seq;
  auto first = out.order.begin();
  if (dir == MoveDirection::kForward) {
    std::rotate(first + (i - 1), first + i, first + k);
  } else {
    std::rotate(first + (k - 1), first + (i - 1), first + i);
  }
  return out;
}

// Shift of a block's makespan caused by reordering it with a fixed entry:
// sum min(0, w_before) - sum min(0, w_after). Positive when idle was added.
inline Time idle_adjustment(const WaitingProfile& before,
                            const WaitingProfile& after) {
  if (before.entry != after.entry) {
    throw std::invalid_argument("idle_adjustment: entry times differ");
  }
  std::vector<JobId> a = before.order;
  std::vector<JobId> b = after.order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("idle_adjustment: job sets differ");
  Time sum_before = 0;
  Time sum_after = 0;
  for (Time w : before.waits) sum_before += std::min<Time>(0, w);
  for (Time w : after.waits) sum_after += std::min<Time>(0, w);
  return sum_before - sum_after;
}

}  // namespace optsort

#endif  // OPTSORT_MOVE_CALCULUS_HPP_
