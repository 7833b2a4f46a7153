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

// Signed waiting-time profile of a job order.
//
// Each job j gets w_j = r^o + (processing since the queue leader) - r_j, where
// the queue leader is the most recent job whose own w was <= 0 and r^o is its
// release. A negative w is machine idle time inserted before the job; only
// the positive part counts towards the objective sum max(0, w).
//
// Profiles can be computed for a whole sequence or for a contiguous block
// whose predecessor completes at `entry`. For a whole sequence the machine is
// available from time 0, so the first position gets w = -r (idle since time
// 0); it is always a leader.

#ifndef OPTSORT_TIMELINE_HPP_
#define OPTSORT_TIMELINE_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "optsort/instance.hpp"

namespace optsort {

struct WaitingProfile {
  // All vectors are indexed by position - 1.
  std::vector<JobId> order;
  std::vector<Time> waits;
  std::vector<bool> leader;
  std::vector<Time> starts;
  std::vector<Time> completions;
  std::vector<Time> processing;
  Time entry = 0;
  Time objective = 0;

  int size() const { return static_cast<int>(waits.size()); }

  JobId job(Position k) const { return order[k - 1]; }
  Time wait(Position k) const { return waits[k - 1]; }
  bool is_leader(Position k) const { return leader[k - 1]; }
  Time start(Position k) const { return starts[k - 1]; }
  Time completion(Position k) const { return completions[k - 1]; }
  Time p(Position k) const { return processing[k - 1]; }

  // Completion time of position k - 1; `entry` for the first position.
  Time predecessor_completion(Position k) const {
    return k == 1 ? entry : completions[k - 2];
  }
};

inline WaitingProfile compute_profile(const Instance& inst,
                                      std::span<const JobId> order,
                                      Time entry = 0) {
  WaitingProfile prof;
  const int n = static_cast<int>(order.size());
  prof.order.assign(order.begin(), order.end());
  prof.waits.resize(n);
  prof.leader.resize(n);
  prof.starts.resize(n);
  prof.completions.resize(n);
  prof.processing.resize(n);
  prof.entry = entry;

  // The entry time acts as a virtual leader release with nothing processed.
  Time leader_release = entry;
  Time since_leader = 0;
  for (int k = 0; k < n; ++k) {
    const JobId job = order[k];
    const Time r = inst.release(job);
    const Time p = inst.processing(job);
    const Time w = leader_release + since_leader - r;
    prof.waits[k] = w;
    prof.processing[k] = p;
    if (w <= 0) {
      prof.leader[k] = true;
      leader_release = r;
      since_leader = 0;
    } else {
      prof.leader[k] = false;
    }
    prof.starts[k] = r + std::max<Time>(0, w);
    prof.completions[k] = prof.starts[k] + p;
    since_leader += p;
    prof.objective += std::max<Time>(0, w);
  }
  return prof;
}

inline WaitingProfile compute_profile(const Instance& inst,
                                      const Sequence& seq) {
  check_sequence(inst, seq.order);
  return compute_profile(inst, seq.order, 0);
}

inline Time total_waiting(const WaitingProfile& prof) {
  Time sum = 0;
  for (Time w : prof.waits) sum += std::max<Time>(0, w);
  return sum;
}

inline Time total_idle(const WaitingProfile& prof) {
  Time sum = 0;
  for (Time w : prof.waits) sum -= std::min<Time>(0, w);
  return sum;
}

inline Time makespan(const WaitingProfile& prof) {
  return prof.completions.empty() ? prof.entry : prof.completions.back();
}

enum class OrderRelation { kFcfsConsistent, kLcfsSwapped };

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Adjacent-pair relation between positions k and k+1. In release order the
// truncated wait of the follower is at most max(0, w_k) + p_k; a follower
// released earlier than its predecessor always waits strictly longer.
inline OrderRelation classify_adjacent(const WaitingProfile& prof,
                                       const Instance& inst, Position k) {
  if (k < 1 || k >= prof.size()) {
    throw std::out_of_range("classify_adjacent: position out of range");
  }
  const Time lhs = std::max<Time>(0, prof.wait(k)) + prof.p(k);
  const Time rhs = std::max<Time>(0, prof.wait(k + 1));
  const bool in_order =
      inst.release(prof.job(k)) <= inst.release(prof.job(k + 1));
  if (in_order) {
    if (!(lhs >= rhs)) {
      throw InvariantViolation("FCFS pair at position " + std::to_string(k) +
                               " violates max(0,w)+p >= max(0,w')");
    }
    return OrderRelation::kFcfsConsistent;
  }
  if (!(lhs < rhs)) {
    throw InvariantViolation("LCFS pair at position " + std::to_string(k) +
                             " violates max(0,w)+p < max(0,w')");
  }
  return OrderRelation::kLcfsSwapped;
}

// Objective of `order` without materializing a profile.
inline Time objective_of(const Instance& inst, std::span<const JobId> order,
                         Time entry = 0) {
  Time machine_free = entry;
  Time sum = 0;
  for (JobId job : order) {
    const Time r = inst.release(job);
    if (machine_free > r) {
      sum += machine_free - r;
    } else {
      machine_free = r;
    }
    machine_free += inst.processing(job);
  }
  return sum;
}

}  // namespace optsort

#endif  // OPTSORT_TIMELINE_HPP_
