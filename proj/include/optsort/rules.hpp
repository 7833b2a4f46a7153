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

// The two local-search rules applied to a contiguous segment of a sequence.
//
// A segment is evaluated at its entry time (completion of whatever precedes
// it) together with the flow injected at its head: an increasing flow f
// raises the head's wait by f, a decreasing flow lowers it. The segment
// value is the segment's own sum max(0, w) plus the objective change of that
// flow as propagated through the segment.
//
// Adjacent exchange works on a segment receiving an increasing flow and
// swaps neighbours with p_left > p_right whenever the segment value drops.
//
// Bottleneck breakthrough works on a segment receiving a decreasing flow.
// It finds the first position l whose wait is smaller than the flow arriving
// there (so part of the flow is lost) and pulls a later waiting job g back
// in front of l when g would still wait longer than l did and the segment
// value drops. The best such g is taken by (value change, p, position); if
// none exists the scan moves past l.

#ifndef OPTSORT_RULES_HPP_
#define OPTSORT_RULES_HPP_

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/move_calculus.hpp"
#include "optsort/propagation.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

// Unchanged prefix, wait-decreasing and wait-increasing parts of a move.
enum class SegmentRole { kUnchanged, kDecreasing, kIncreasing };

struct SegmentContext {
  // Inclusive position range within the sequence.
  Position first = 1;
  Position last = 0;
  SegmentRole role = SegmentRole::kIncreasing;
  // Magnitude of the flow entering at `first`.
  Time flow_in = 0;
  // Completion time of the job before `first` (0 at the front).
  Time entry_time = 0;

  int length() const { return last - first + 1; }
};

struct RuleOutcome {
  Sequence sequence;
  // Change of the segment value; negative when the rule improved it.
  Time change = 0;
  int moves = 0;
};

// Segment sum max(0, w) after injecting `flow` (>= 0) of the given kind at
// the head.
inline Time segment_value(const Instance& inst, std::span<const JobId> segment,
                          Time entry, Time flow, FlowKind kind) {
  if (segment.empty()) return 0;
  const WaitingProfile prof = compute_profile(inst, segment, entry);
  if (flow == 0) return prof.objective;
  const FlowTrace trace = kind == FlowKind::kIncrease
                              ? propagate_increase(prof, 1, flow)
                              : propagate_decrease(prof, 1, flow);
  return prof.objective + objective_delta(trace);
}

namespace internal {

inline void check_segment(const SegmentContext& ctx, const Sequence& seq,
                          SegmentRole role, const char* rule) {
  if (ctx.role != role) {
    throw std::invalid_argument(std::string(rule) + ": wrong segment role");
  }
  if (ctx.first < 1 || ctx.last > seq.size() || ctx.first > ctx.last + 1) {
    throw std::out_of_range(std::string(rule) + ": segment out of range");
  }
}

inline std::span<JobId> segment_of(Sequence& seq, const SegmentContext& ctx) {
  return std::span<JobId>(seq.order).subspan(ctx.first - 1, ctx.length());
}

}  // namespace internal

inline RuleOutcome adjacent_exchange(const SegmentContext& ctx,
                                     const Instance& inst,
                                     const Sequence& seq) {
  internal::check_segment(ctx, seq, SegmentRole::kIncreasing,
                          "adjacent_exchange");
  if (ctx.flow_in < 0) {
    throw std::invalid_argument("adjacent_exchange: increasing flow < 0");
  }
  RuleOutcome out{seq, 0, 0};
  const int len = ctx.length();
  if (len < 2) return out;
  auto seg = internal::segment_of(out.sequence, ctx);
  auto value = [&] {
    return segment_value(inst, seg, ctx.entry_time, ctx.flow_in,
                         FlowKind::kIncrease);
  };
  const Time initial = value();
  Time current = initial;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int j = 0; j + 1 < len; ++j) {
      if (inst.processing(seg[j]) <= inst.processing(seg[j + 1])) continue;
      std::swap(seg[j], seg[j + 1]);
      const Time v = value();
      if (v < current) {
        current = v;
        ++out.moves;
        swapped = true;
      } else {
        std::swap(seg[j], seg[j + 1]);
      }
    }
  }
  // Every accepted swap removes one processing-time inversion.
  if (out.moves > len * (len - 1) / 2) {
    throw InvariantViolation("adjacent_exchange: swap budget exceeded");
  }
  out.change = current - initial;
  return out;
}

// Profile of the segment re-sorted by non-decreasing processing time (ties
// by release, then id) at the segment's entry time.
inline WaitingProfile sorted_segment_profile(const SegmentContext& ctx,
                                             const Instance& inst,
                                             const Sequence& seq) {
  std::vector<JobId> jobs(seq.order.begin() + (ctx.first - 1),
                          seq.order.begin() + ctx.last);
  std::sort(jobs.begin(), jobs.end(), [&](JobId a, JobId b) {
    return std::tuple(inst.processing(a), inst.release(a), a) <
           std::tuple(inst.processing(b), inst.release(b), b);
  });
  return compute_profile(inst, jobs, ctx.entry_time);
}

// True when the injected flow covers all idle time of the processing-time
// sorted segment, so that order runs without gaps.
inline bool certify_global(const SegmentContext& ctx,
                           const WaitingProfile& sorted_profile) {
  Time idle = 0;
  for (Time w : sorted_profile.waits) idle += std::min<Time>(0, w);
  return ctx.flow_in + idle >= 0;
}

inline RuleOutcome bottleneck_breakthrough(const SegmentContext& ctx,
                                           const Instance& inst,
                                           const Sequence& seq) {
  internal::check_segment(ctx, seq, SegmentRole::kDecreasing,
                          "bottleneck_breakthrough");
  RuleOutcome out{seq, 0, 0};
  const int len = ctx.length();
  const Time flow = ctx.flow_in;
  if (len < 1 || flow <= 0) return out;
  auto seg = internal::segment_of(out.sequence, ctx);
  {
    const WaitingProfile prof = compute_profile(inst, seg, ctx.entry_time);
    if (std::all_of(prof.waits.begin(), prof.waits.end(),
                    [&](Time w) { return w >= flow; })) {
      return out;
    }
  }
  auto value = [&](std::span<const JobId> s) {
    return segment_value(inst, s, ctx.entry_time, flow, FlowKind::kDecrease);
  };
  const Time initial = value(seg);
  Time current = initial;
  std::vector<JobId> trial(len);
  // Each pass either applies a strictly improving move or advances the scan,
  // so the loop ends.
  Position scan = 1;
  while (scan <= len - 1) {
    const WaitingProfile prof = compute_profile(inst, seg, ctx.entry_time);
    const FlowTrace trace = propagate_decrease(prof, 1, flow);
    Position blocked = 0;
    for (Position l = scan; l <= len - 1; ++l) {
      if (trace.at(l) > 0 && prof.wait(l) < trace.at(l)) {
        blocked = l;
        break;
      }
    }
    if (blocked == 0) break;

    bool found = false;
    std::tuple<Time, Time, Position> best_key;
    Time best_value = 0;
    for (Position g = blocked + 1; g <= len; ++g) {
      if (prof.wait(g) <= 0) continue;
      const MoveEvaluation ev = backward_move_delta(prof, g, blocked);
      if (ev.new_wait <= prof.wait(blocked)) continue;
      std::copy(seg.begin(), seg.end(), trial.begin());
      std::rotate(trial.begin() + (blocked - 1), trial.begin() + (g - 1),
                  trial.begin() + g);
      const Time v = value(trial);
      if (v - current >= 0) continue;
      const auto key = std::tuple(v - current, prof.p(g), g);
      if (!found || key < best_key) {
        found = true;
        best_key = key;
        best_value = v;
      }
    }
    if (found) {
      const Position g = std::get<2>(best_key);
      std::rotate(seg.begin() + (blocked - 1), seg.begin() + (g - 1),
                  seg.begin() + g);
      current = best_value;
      ++out.moves;
    } else {
      scan = blocked + 1;
    }
  }
  out.change = current - initial;
  return out;
}

}  // namespace optsort

#endif  // OPTSORT_RULES_HPP_
