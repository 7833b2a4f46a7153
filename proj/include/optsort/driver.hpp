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

// Outer search loop and its two inner operators.
//
// A pass takes the forward candidate moves of the current sequence. Each one
// is expanded into a full candidate sequence: the move itself, the
// bottleneck rule on the jobs it overtook, adjacent exchange on the jobs
// behind it, then the consumption operator, the backward traversal and the
// consumption operator again. The best candidate replaces the current
// sequence when it is strictly better; the search stops after a pass with
// no improvement.
//
// The consumption operator repeats best-improvement sweeps over the forward
// candidates of its current best sequence, then applies the bottleneck rule
// to the whole sequence with no injected flow. The backward traversal
// repeats best-improvement sweeps over backward candidates.

#ifndef OPTSORT_DRIVER_HPP_
#define OPTSORT_DRIVER_HPP_

#include <cassert>
#include <chrono>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/move_calculus.hpp"
#include "optsort/rules.hpp"
#include "optsort/solution_sets.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

struct MoveLogEntry {
  // Outer pass (0-based) in which the update was accepted.
  int iteration = 0;
  MoveDirection kind = MoveDirection::kForward;
  Position i = 0;
  Position k = 0;
  // Closed-form objective change of the candidate's initial relocation.
  Time predicted_delta = 0;
  Time objective_before = 0;
  Time objective_after = 0;
};

struct SolveResult {
  Sequence best_sequence;
  Time best_objective = 0;
  // Outer passes performed, including the final one without improvement.
  int iterations = 0;
  std::vector<MoveLogEntry> move_log;
  double elapsed_ms = 0.0;
  bool safety_tripped = false;
};

struct SolverOptions {
  // Outer pass limit; 0 means n * n.
  int max_passes = 0;
};

namespace internal {

inline Time objective(const Instance& inst, const Sequence& seq) {
  return objective_of(inst, seq.order);
}

inline std::vector<JobId> slice(const Sequence& seq, Position first,
                                Position last) {
  return {seq.order.begin() + (first - 1), seq.order.begin() + last};
}

}  // namespace internal

// Candidate sequence grown from moving position i after position k of
// `base`. `prof` must be the profile of `base`.
inline Sequence forward_pipeline(const Instance& inst, const Sequence& base,
                                 const WaitingProfile& prof, Position i,
                                 Position k, bool whole_sequence_exchange) {
  const int n = base.size();
  const MoveEvaluation ev = forward_move_delta(prof, i, k);
  Sequence seq = apply_move(base, i, k, MoveDirection::kForward);

  // Overtaken jobs now occupy i..k-1 and the mover sits at k.
  const Time block_entry = prof.predecessor_completion(i);
  const auto block_before = internal::slice(seq, i, k);
  const SegmentContext dec{i, k - 1, SegmentRole::kDecreasing, ev.seed,
                           prof.completion(i)};
  seq = bottleneck_breakthrough(dec, inst, seq).sequence;
  const auto block_after = internal::slice(seq, i, k);
  const Time minus =
      idle_adjustment(compute_profile(inst, block_before, block_entry),
                      compute_profile(inst, block_after, block_entry));

  // Signed shift of the mover's completion relative to the old C_k.
  const Time shift = ev.part_flow + minus;
  assert(shift == makespan(compute_profile(inst, block_after, block_entry)) -
                      prof.completion(k));
  if (k < n) {
    SegmentContext inc{k + 1, n, SegmentRole::kIncreasing, shift,
                       prof.completion(k)};
    if (shift < 0) {
      inc.entry_time += shift;
      inc.flow_in = 0;
    }
    seq = adjacent_exchange(inc, inst, seq).sequence;
  }
  if (whole_sequence_exchange) {
    const SegmentContext all{1, n, SegmentRole::kIncreasing, 0, 0};
    seq = adjacent_exchange(all, inst, seq).sequence;
  }
  return seq;
}

// Candidate sequence grown from moving position i before position k (k < i).
inline Sequence backward_pipeline(const Instance& inst, const Sequence& base,
                                  const WaitingProfile& prof, Position i,
                                  Position k) {
  const int n = base.size();
  const MoveEvaluation ev = backward_move_delta(prof, i, k);
  Sequence seq = apply_move(base, i, k, MoveDirection::kBackward);

  // The mover sits at k; the jobs it passed occupy k+1..i.
  const Time front = prof.predecessor_completion(k);
  const auto block_before = internal::slice(seq, k + 1, i);
  const SegmentContext inc{k + 1, i, SegmentRole::kIncreasing, ev.seed, front};
  seq = adjacent_exchange(inc, inst, seq).sequence;
  const auto block_after = internal::slice(seq, k + 1, i);
  const Time block_entry = front + ev.seed;
  const Time minus =
      idle_adjustment(compute_profile(inst, block_before, block_entry),
                      compute_profile(inst, block_after, block_entry));

  // Signed shift of the block's completion relative to the old C_i.
  const Time shift = ev.part_flow + minus;
  assert(shift == makespan(compute_profile(inst, block_after, block_entry)) -
                      prof.completion(i));
  if (i < n) {
    const SegmentContext dec{i + 1, n, SegmentRole::kDecreasing, -shift,
                             prof.completion(i)};
    seq = bottleneck_breakthrough(dec, inst, seq).sequence;
  }
  return seq;
}

inline Sequence consumption_operator(const Instance& inst,
                                     const Sequence& input) {
  Sequence best = input;
  Time best_obj = internal::objective(inst, best);
  const int n = input.size();

  bool improve = true;
  while (improve) {
    improve = false;
    const Sequence base = best;
    const WaitingProfile prof = compute_profile(inst, base.order);
    for (Position i = 1; i <= n; ++i) {
      for (Position k : forward_solution_set(prof, i)) {
        Sequence cand = forward_pipeline(inst, base, prof, i, k, false);
        const Time obj = internal::objective(inst, cand);
        if (obj < best_obj) {
          best = std::move(cand);
          best_obj = obj;
          improve = true;
        }
      }
    }
  }

  improve = true;
  while (improve) {
    improve = false;
    const SegmentContext all{1, n, SegmentRole::kDecreasing, 0, 0};
    Sequence cand = bottleneck_breakthrough(all, inst, best).sequence;
    const Time obj = internal::objective(inst, cand);
    if (obj < best_obj) {
      best = std::move(cand);
      best_obj = obj;
      improve = true;
    }
  }
  return best;
}

inline Sequence backward_traversal(const Instance& inst,
                                   const Sequence& input) {
  Sequence best = input;
  Time best_obj = internal::objective(inst, best);
  const int n = input.size();
  bool improve = true;
  while (improve) {
    improve = false;
    const Sequence base = best;
    const WaitingProfile prof = compute_profile(inst, base.order);
    for (Position i = 1; i <= n; ++i) {
      for (Position k : backward_solution_set(prof, i)) {
        Sequence cand = backward_pipeline(inst, base, prof, i, k);
        const Time obj = internal::objective(inst, cand);
        if (obj < best_obj) {
          best = std::move(cand);
          best_obj = obj;
          improve = true;
        }
      }
    }
  }
  return best;
}

inline SolveResult optimal_sort(const Instance& inst, const Sequence& start,
                                const SolverOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  check_sequence(inst, start.order);
  const int n = inst.size();
  const int limit = options.max_passes > 0 ? options.max_passes : n * n;

  SolveResult result;
  Sequence current = start;
  current.iteration = 0;
  Time current_obj = internal::objective(inst, current);

  int t = 0;
  bool improve = true;
  while (improve) {
    improve = false;
    const WaitingProfile prof = compute_profile(inst, current.order);
    Sequence best = current;
    Time best_obj = current_obj;
    MoveLogEntry entry;
    for (Position i = 1; i <= n; ++i) {
      for (Position k : forward_solution_set(prof, i)) {
        const bool whole = k == n && t == 0;
        Sequence cand = forward_pipeline(inst, current, prof, i, k, whole);
        cand = consumption_operator(inst, cand);
        cand = backward_traversal(inst, cand);
        cand = consumption_operator(inst, cand);
        const Time obj = internal::objective(inst, cand);
        if (obj < best_obj) {
          best = std::move(cand);
          best_obj = obj;
          improve = true;
          entry = {t, MoveDirection::kForward, i, k,
                   forward_move_delta(prof, i, k).delta_total, current_obj,
                   obj};
        }
      }
    }
    ++t;
    if (improve) {
      current = std::move(best);
      current.iteration = t;
      current_obj = best_obj;
      result.move_log.push_back(entry);
      if (t >= limit) {
        result.safety_tripped = true;
        break;
      }
    }
  }

  result.best_sequence = current;
  result.best_objective = current_obj;
  result.iterations = t;
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return result;
}

inline SolveResult optimal_sort(const Instance& inst,
                                const SolverOptions& options = {}) {
  return optimal_sort(inst, initial_sequence(inst), options);
}

}  // namespace optsort

#endif  // OPTSORT_DRIVER_HPP_
