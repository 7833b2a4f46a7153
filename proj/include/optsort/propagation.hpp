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

// Flow propagation: how a change in the signed wait of one position cascades
// down the queue.
//
// A decrease of d at position k reaches k+1 as min(d, w_k) while w_k > 0 and
// is absorbed completely by a leader (w_k <= 0). An increase of d passes
// unchanged through waiting jobs and shrinks to max(0, d + w_k) at a leader.
// The value carried into position k+1 is exactly the change of job k's
// truncated wait, so the trace has a sentinel slot at n+1 for the last job.
//
// A FlowTrace is only meaningful for the profile it was computed from.

#ifndef OPTSORT_PROPAGATION_HPP_
#define OPTSORT_PROPAGATION_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

enum class FlowKind { kDecrease, kIncrease };

struct FlowTrace {
  FlowKind kind = FlowKind::kDecrease;
  Position origin = 1;
  // values[0] is the injected amount at `origin`; the last slot is n+1.
  std::vector<Time> values;
  std::uint64_t profile_fingerprint = 0;

  // Value carried into position k, origin <= k <= n+1.
  Time at(Position k) const { return values[k - origin]; }
  Position last() const {
    return origin + static_cast<Position>(values.size()) - 1;
  }
};

inline std::uint64_t fingerprint(const WaitingProfile& prof) {
  std::uint64_t h =
      1469598103934665603ULL ^ static_cast<std::uint64_t>(prof.entry);
  for (std::size_t k = 0; k < prof.waits.size(); ++k) {
    h = (h ^ static_cast<std::uint64_t>(prof.order[k])) * 1099511628211ULL;
    h = (h ^ static_cast<std::uint64_t>(prof.waits[k])) * 1099511628211ULL;
  }
  return h;
}

namespace internal {

inline void check_origin(const WaitingProfile& prof, Position j, Time delta) {
  if (j < 1 || j > prof.size()) {
    throw std::out_of_range("flow origin out of range");
  }
  if (delta < 0) throw std::invalid_argument("flow magnitude must be >= 0");
}

}  // namespace internal

inline FlowTrace propagate_decrease(const WaitingProfile& prof, Position j,
                                    Time delta) {
  internal::check_origin(prof, j, delta);
  FlowTrace trace;
  trace.kind = FlowKind::kDecrease;
  trace.origin = j;
  trace.values.reserve(prof.size() - j + 2);
  trace.values.push_back(delta);
  Time carried = delta;
  for (Position k = j; k <= prof.size(); ++k) {
    const Time w = prof.wait(k);
    carried = w <= 0 ? 0 : std::min(carried, w);
    trace.values.push_back(carried);
  }
#ifndef NDEBUG
  trace.profile_fingerprint = fingerprint(prof);
#endif
  return trace;
}

inline FlowTrace propagate_increase(const WaitingProfile& prof, Position j,
                                    Time delta) {
  internal::check_origin(prof, j, delta);
  FlowTrace trace;
  trace.kind = FlowKind::kIncrease;
  trace.origin = j;
  trace.values.reserve(prof.size() - j + 2);
  trace.values.push_back(delta);
  Time carried = delta;
  for (Position k = j; k <= prof.size(); ++k) {
    const Time w = prof.wait(k);
    carried = w > 0 ? carried : std::max<Time>(0, carried + w);
    trace.values.push_back(carried);
  }
#ifndef NDEBUG
  trace.profile_fingerprint = fingerprint(prof);
#endif
  return trace;
}

// Change of sum max(0, w) caused by the traced perturbation: the sum of the
// carried values from origin+1 through the sentinel, signed by kind.
inline Time objective_delta(const FlowTrace& trace) {
  Time sum = 0;
  for (std::size_t i = 1; i < trace.values.size(); ++i) sum += trace.values[i];
  return trace.kind == FlowKind::kIncrease ? sum : -sum;
}

// Debug-build check that `trace` was computed from `prof`.
inline bool trace_matches(const FlowTrace& trace, const WaitingProfile& prof) {
#ifndef NDEBUG
  return trace.profile_fingerprint == fingerprint(prof);
#else
  (void)trace;
  (void)prof;
  return true;
#endif
}

// Objective change of injecting a signed change at position j: an increase
// for positive amounts, a decrease of -amount for negative ones. Positions
// past the end (j == n+1) have nothing downstream.
inline Time flow_objective_change(const WaitingProfile& prof, Position j,
                                  Time signed_amount) {
  if (j > prof.size() || signed_amount == 0) return 0;
  Time carried = signed_amount > 0 ? signed_amount : -signed_amount;
  Time sum = 0;
  if (signed_amount > 0) {
    for (Position k = j; k <= prof.size() && carried > 0; ++k) {
      const Time w = prof.wait(k);
      carried = w > 0 ? carried : std::max<Time>(0, carried + w);
      sum += carried;
    }
    return sum;
  }
  for (Position k = j; k <= prof.size() && carried > 0; ++k) {
    const Time w = prof.wait(k);
    carried = w <= 0 ? 0 : std::min(carried, w);
    sum += carried;
  }
  return -sum;
}

}  // namespace optsort

#endif  // OPTSORT_PROPAGATION_HPP_
