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

#include <algorithm>
#include <random>
#include <vector>

#include "optsort/driver.hpp"
#include "support/sim_oracle.hpp"

namespace optsort {
namespace {

using testing::reference_instance;

TEST(OptimalSort, ReferenceInstance) {
  const SolveResult r = optimal_sort(reference_instance());
  EXPECT_EQ(r.best_objective, 4);
  EXPECT_EQ(r.best_sequence.order, (std::vector<JobId>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(r.safety_tripped);
  EXPECT_EQ(testing::enumerate_optimum(reference_instance()), 4);
}

TEST(OptimalSort, SingleJob) {
  const SolveResult r = optimal_sort(Instance({3}, {7}));
  EXPECT_EQ(r.best_objective, 0);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_TRUE(r.move_log.empty());
}

TEST(OptimalSort, EqualReleasesGiveSpt) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<Time> p(n);
    for (auto& v : p) v = 1 + static_cast<Time>(rng() % 50);
    const Instance inst(std::vector<Time>(n, 0), p);
    const SolveResult r = optimal_sort(inst);
    for (Position k = 1; k < n; ++k) {
      ASSERT_LE(inst.processing(r.best_sequence.at(k)),
                inst.processing(r.best_sequence.at(k + 1)));
    }
  }
}

TEST(OptimalSort, SmallInstanceReachesOptimum) {
  const Instance inst({0, 1, 2}, {2, 5, 3});
  const SolveResult r = optimal_sort(inst);
  EXPECT_EQ(r.best_objective, 4);
  EXPECT_EQ(r.best_sequence.order, (std::vector<JobId>{1, 3, 2}));
}

TEST(OptimalSort, ResultIsConsistent) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Instance inst = testing::random_instance(rng, n);
    const SolveResult r = optimal_sort(inst);
    ASSERT_TRUE(is_permutation_of(r.best_sequence.order, n));
    ASSERT_EQ(r.best_objective,
              testing::sim_objective(inst, r.best_sequence.order));
    ASSERT_LE(r.best_objective,
              testing::sim_objective(inst, initial_sequence(inst).order));
    ASSERT_FALSE(r.safety_tripped);
    ASSERT_EQ(r.iterations, static_cast<int>(r.move_log.size()) + 1);
  }
}

// Accepted objectives strictly decrease, and each logged seed delta is the
// exact objective change of that single relocation.
TEST(OptimalSort, MoveLogIsExact) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Instance inst = testing::random_instance(rng, n);
    const SolveResult r = optimal_sort(inst);
    Sequence current = initial_sequence(inst);
    for (const auto& e : r.move_log) {
      ASSERT_LT(e.objective_after, e.objective_before);
      ASSERT_EQ(e.objective_before, objective_of(inst, current.order));
      const Sequence seeded =
          apply_move(current, e.i, e.k, MoveDirection::kForward);
      ASSERT_EQ(e.predicted_delta, objective_of(inst, seeded.order) -
                                       objective_of(inst, current.order));
      // The next pass starts from this pass's result; replay it.
      const WaitingProfile prof = compute_profile(inst, current.order);
      Sequence cand = forward_pipeline(inst, current, prof, e.i, e.k,
                                       e.k == n && e.iteration == 0);
      cand = consumption_operator(inst, cand);
      cand = backward_traversal(inst, cand);
      cand = consumption_operator(inst, cand);
      ASSERT_EQ(objective_of(inst, cand.order), e.objective_after);
      current = cand;
    }
  }
}

TEST(OptimalSort, MatchesEnumerationAtSmallSizes) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance inst = testing::random_instance(rng, n, 60, 20);
    ASSERT_EQ(optimal_sort(inst).best_objective,
              testing::enumerate_optimum(inst))
        << "trial " << trial;
  }
}

TEST(OptimalSort, Idempotent) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = testing::random_instance(rng, 10);
    const SolveResult first = optimal_sort(inst);
    const SolveResult again = optimal_sort(inst, first.best_sequence);
    ASSERT_EQ(again.best_objective, first.best_objective);
    ASSERT_EQ(again.best_sequence.order, first.best_sequence.order);
    ASSERT_EQ(again.iterations, 1);
  }
}

TEST(OptimalSort, SafetyValveReports) {
  const Instance inst({0, 1, 2}, {2, 5, 3});
  SolverOptions opts;
  opts.max_passes = 1;
  const SolveResult r = optimal_sort(inst, Sequence{{3, 2, 1}}, opts);
  EXPECT_TRUE(r.safety_tripped);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(r.best_objective, objective_of(inst, r.best_sequence.order));
}

TEST(ConsumptionOperator, SmallInstance) {
  const Instance inst({0, 1, 2}, {2, 5, 3});
  const Sequence out = consumption_operator(inst, Sequence{{1, 2, 3}});
  EXPECT_EQ(out.order, (std::vector<JobId>{1, 3, 2}));
  EXPECT_EQ(objective_of(inst, out.order), 4);
}

TEST(ConsumptionOperator, OptimalInputUnchanged) {
  const Instance inst = reference_instance();
  const Sequence seq{{1, 2, 3, 4, 5}};
  EXPECT_EQ(consumption_operator(inst, seq), seq);
  EXPECT_EQ(consumption_operator(Instance({4}, {1}), Sequence{{1}}),
            Sequence{{1}});
}

TEST(BackwardTraversal, OptimalInputUnchanged) {
  const Instance inst = reference_instance();
  const Sequence seq{{1, 2, 3, 4, 5}};
  EXPECT_EQ(backward_traversal(inst, seq), seq);
}

// A long job (job 1) parked behind a block; the traversal pulls it back and
// reaches the optimum.
TEST(BackwardTraversal, PullsBackParkedJob) {
  const Instance inst({1, 30, 40, 19, 39, 22, 23, 29},
                      {12, 12, 9, 4, 10, 9, 11, 7});
  const Sequence seq{{4, 6, 8, 1, 5, 3, 7, 2}};
  ASSERT_EQ(objective_of(inst, seq.order), 173);
  const Sequence out = backward_traversal(inst, seq);
  EXPECT_EQ(objective_of(inst, out.order), 87);
  EXPECT_EQ(testing::enumerate_optimum(inst), 87);
}

TEST(BackwardTraversal, TwoJobsMatchEnumeration) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 2, 30, 20);
    for (const Sequence& seq : {Sequence{{1, 2}}, Sequence{{2, 1}}}) {
      Sequence out = consumption_operator(inst, backward_traversal(inst, seq));
      ASSERT_EQ(objective_of(inst, out.order),
                testing::enumerate_optimum(inst));
    }
  }
}

TEST(Pipelines, ProducePermutations) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Instance inst = testing::random_instance(rng, n);
    const Sequence base{testing::random_order(rng, n)};
    const WaitingProfile prof = compute_profile(inst, base.order);
    for (Position i = 1; i <= n; ++i) {
      for (Position k = 1; k <= n; ++k) {
        if (k == i) continue;
        const Sequence out =
            k > i ? forward_pipeline(inst, base, prof, i, k, false)
                  : backward_pipeline(inst, base, prof, i, k);
        ASSERT_TRUE(is_permutation_of(out.order, n));
      }
    }
  }
}

}  // namespace
}  // namespace optsort
