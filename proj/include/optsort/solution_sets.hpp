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

// Candidate relocations that can improve the objective.
//
// Forward: the job at position i may go after position k when the running
// sum over j = i+1..k of p_j - (p_i - min(0, w_i)) is still <= 0, i.e. the
// jobs it overtakes are collectively no longer than the slack it frees.
//
// Backward: only a waiting job (w_i > 0) can gain by moving earlier. Walking
// back from i, it may be inserted before each position until its wait is
// first covered by the cumulative p - min(0, w) of the jobs passed; that
// crossing position is included. With no crossing every earlier position is
// a candidate.

#ifndef OPTSORT_SOLUTION_SETS_HPP_
#define OPTSORT_SOLUTION_SETS_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "optsort/instance.hpp"
#include "optsort/move_calculus.hpp"
#include "optsort/timeline.hpp"

namespace optsort {

struct CandidateMove {
  Position i = 0;
  Position k = 0;
  MoveDirection direction = MoveDirection::kForward;

  friend bool operator==(const CandidateMove&, const CandidateMove&) = default;
};

struct SolutionSets {
  // Indexed by source position - 1; entries are ascending anchor positions
  // (forward) or descending insertion positions (backward).
  std::vector<std::vector<Position>> forward;
  std::vector<std::vector<Position>> backward;

  // Forward moves first, by ascending (i, k); then backward moves by
  // ascending i and descending k.
  std::vector<CandidateMove> all() const {
    std::vector<CandidateMove> out;
    for (std::size_t s = 0; s < forward.size(); ++s) {
      for (Position k : forward[s]) {
        out.push_back({static_cast<Position>(s) + 1, k,
                       MoveDirection::kForward});
      }
    }
    for (std::size_t s = 0; s < backward.size(); ++s) {
      for (Position k : backward[s]) {
        out.push_back({static_cast<Position>(s) + 1, k,
                       MoveDirection::kBackward});
      }
    }
    return out;
  }

  bool contains(Position i, Position k) const {
    const auto& set = k > i ? forward.at(i - 1) : backward.at(i - 1);
    return std::find(set.begin(), set.end(), k) != set.end();
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& s : forward) total += s.size();
    for (const auto& s : backward) total += s.size();
    return total;
  }
};

inline std::vector<Position> forward_solution_set(const WaitingProfile& prof,
                                                  Position i) {
  const int n = prof.size();
  if (i < 1 || i > n) throw std::out_of_range("forward_solution_set: i");
  const Time slack = prof.p(i) - std::min<Time>(0, prof.wait(i));
  std::vector<Position> out;
  Time running = 0;
  for (Position k = i + 1; k <= n; ++k) {
    running += prof.p(k) - slack;
    if (running <= 0) out.push_back(k);
  }
  return out;
}

inline std::vector<Position> backward_solution_set(const WaitingProfile& prof,
                                                   Position i) {
  const int n = prof.size();
  if (i < 1 || i > n) throw std::out_of_range("backward_solution_set: i");
  std::vector<Position> out;
  const Time w = prof.wait(i);
  if (w <= 0) return out;
  Time cumulative = 0;
  for (int step = 1; step <= i - 1; ++step) {
    const Position k = i - step;
    cumulative += prof.p(k) - std::min<Time>(0, prof.wait(k));
    out.push_back(k);
    if (w <= cumulative) break;
  }
  return out;
}

inline SolutionSets full_solution_space(const WaitingProfile& prof) {
  SolutionSets sets;
  const int n = prof.size();
  sets.forward.resize(n);
  sets.backward.resize(n);
  for (Position i = 1; i <= n; ++i) {
    sets.forward[i - 1] = forward_solution_set(prof, i);
    sets.backward[i - 1] = backward_solution_set(prof, i);
  }
  return sets;
}

}  // namespace optsort

#endif  // OPTSORT_SOLUTION_SETS_HPP_
