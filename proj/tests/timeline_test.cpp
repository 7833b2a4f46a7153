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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "optsort/timeline.hpp"
#include "support/sim_oracle.hpp"

namespace optsort {
namespace {

using testing::reference_instance;
using testing::simulate;

TEST(ComputeProfile, ReferenceInstance) {
  const Instance inst = reference_instance();
  const WaitingProfile prof = compute_profile(inst, initial_sequence(inst));
  EXPECT_EQ(prof.waits, (std::vector<Time>{0, 2, 1, -8, 1}));
  EXPECT_EQ(prof.objective, 4);
  EXPECT_EQ(total_waiting(prof), 4);
  EXPECT_EQ(makespan(prof), 31);
  EXPECT_EQ(prof.leader, (std::vector<bool>{true, false, false, true, false}));
}

TEST(ComputeProfile, ReferenceInstanceSwappedTail) {
  const Instance inst = reference_instance();
  const WaitingProfile prof = compute_profile(inst, Sequence{{1, 2, 3, 5, 4}});
  EXPECT_EQ(prof.waits, (std::vector<Time>{0, 2, 1, -12, 10}));
  EXPECT_EQ(prof.objective, 13);
  EXPECT_EQ(prof.objective, testing::sim_objective(inst, {1, 2, 3, 5, 4}));
}

TEST(ComputeProfile, SingleJob) {
  const Instance inst({0}, {7});
  const WaitingProfile prof = compute_profile(inst, Sequence{{1}});
  EXPECT_EQ(prof.waits, (std::vector<Time>{0}));
  EXPECT_EQ(prof.objective, 0);
  EXPECT_EQ(makespan(prof), 7);
}

TEST(ComputeProfile, FirstJobIdlesFromTimeZero) {
  const Instance inst({6, 0}, {2, 3});
  const WaitingProfile prof = compute_profile(inst, Sequence{{1, 2}});
  EXPECT_EQ(prof.waits, (std::vector<Time>{-6, 8}));
  EXPECT_TRUE(prof.is_leader(1));
  EXPECT_EQ(prof.start(1), 6);
  EXPECT_EQ(total_idle(prof), 6);
}

TEST(ComputeProfile, AllLeadersWhenSpread) {
  const Instance inst({0, 100, 200}, {5, 5, 5});
  const WaitingProfile prof = compute_profile(inst, initial_sequence(inst));
  EXPECT_EQ(total_waiting(prof), 0);
  for (Position k = 1; k <= 3; ++k) EXPECT_TRUE(prof.is_leader(k));
}

TEST(ComputeProfile, BackToBackMakespan) {
  const Instance inst({4, 4, 5, 6}, {3, 2, 2, 1});
  const WaitingProfile prof = compute_profile(inst, initial_sequence(inst));
  EXPECT_EQ(makespan(prof), 4 + 8);
}

TEST(ComputeProfile, RejectsNonPermutation) {
  const Instance inst = reference_instance();
  EXPECT_THROW(compute_profile(inst, Sequence{{1, 2, 2, 4, 5}}),
               std::invalid_argument);
}

TEST(ComputeProfile, EntryActsAsPredecessorCompletion) {
  const Instance inst = reference_instance();
  const std::vector<JobId> block{4, 5};
  const WaitingProfile prof = compute_profile(inst, block, 22);
  const auto sim = simulate(inst, block, 22);
  EXPECT_EQ(prof.starts, sim.starts);
  EXPECT_EQ(prof.waits, (std::vector<Time>{2, 3}));
  EXPECT_EQ(prof.predecessor_completion(1), 22);
}

// Recursion against discrete-event simulation on random orders.
TEST(ComputeProfile, MatchesSimulation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Instance inst = testing::random_instance(rng, n);
    const auto order = testing::random_order(rng, n);
    const Time entry = trial % 3 == 0 ? static_cast<Time>(rng() % 100) : 0;
    const WaitingProfile prof = compute_profile(inst, order, entry);
    const auto sim = simulate(inst, order, entry);
    ASSERT_EQ(prof.starts, sim.starts);
    ASSERT_EQ(prof.completions, sim.completions);
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(std::max<Time>(0, prof.waits[k]), sim.waiting[k]);
      ASSERT_EQ(-std::min<Time>(0, prof.waits[k]), sim.idle[k]);
    }
    ASSERT_EQ(prof.objective, sim.objective);
    ASSERT_EQ(objective_of(inst, order, entry), sim.objective);
  }
}

TEST(ClassifyAdjacent, ReferenceInstanceFirstPair) {
  const Instance inst = reference_instance();
  const WaitingProfile prof = compute_profile(inst, initial_sequence(inst));
  EXPECT_EQ(classify_adjacent(prof, inst, 1), OrderRelation::kFcfsConsistent);
}

TEST(ClassifyAdjacent, SwappedPair) {
  const Instance inst({0, 1, 2}, {2, 5, 3});
  const WaitingProfile prof = compute_profile(inst, Sequence{{1, 3, 2}});
  EXPECT_EQ(classify_adjacent(prof, inst, 2), OrderRelation::kLcfsSwapped);
}

TEST(ClassifyAdjacent, EqualReleasesAreConsistent) {
  const Instance inst({3, 3, 3, 3}, {4, 1, 7, 2});
  const WaitingProfile prof = compute_profile(inst, Sequence{{3, 1, 4, 2}});
  for (Position k = 1; k < 4; ++k) {
    EXPECT_EQ(classify_adjacent(prof, inst, k), OrderRelation::kFcfsConsistent);
  }
}

TEST(ClassifyAdjacent, OutOfRange) {
  const Instance inst = reference_instance();
  const WaitingProfile prof = compute_profile(inst, initial_sequence(inst));
  EXPECT_THROW(classify_adjacent(prof, inst, 0), std::out_of_range);
  EXPECT_THROW(classify_adjacent(prof, inst, 5), std::out_of_range);
}

TEST(ClassifyAdjacent, CorrespondenceOnRandomOrders) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 49);
    const Instance inst = testing::random_instance(rng, n);
    const auto order = testing::random_order(rng, n);
    const WaitingProfile prof = compute_profile(inst, order);
    for (Position k = 1; k < n; ++k) {
      const auto rel = classify_adjacent(prof, inst, k);
      const bool in_order =
          inst.release(order[k - 1]) <= inst.release(order[k]);
      ASSERT_EQ(rel == OrderRelation::kFcfsConsistent, in_order);
    }
  }
}

}  // namespace
}  // namespace optsort
