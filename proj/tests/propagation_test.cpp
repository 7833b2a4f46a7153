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

#include <random>
#include <vector>

#include "optsort/propagation.hpp"
#include "support/sim_oracle.hpp"

namespace optsort {
namespace {

using testing::reference_instance;

WaitingProfile reference_profile() {
  const Instance inst = reference_instance();
  return compute_profile(inst, initial_sequence(inst));
}

// Truncated waits after forcing position j to start at `forced_start` and
// letting every later job start at max(r, previous completion).
std::vector<Time> forced_waits(const Instance& inst,
                               const std::vector<JobId>& order, int j,
                               Time forced_start) {
  std::vector<Time> waits;
  Time free_at = 0;
  for (int k = 1; k <= static_cast<int>(order.size()); ++k) {
    const Time r = inst.release(order[k - 1]);
    const Time s = k == j ? forced_start : std::max(r, free_at);
    waits.push_back(s - r);
    free_at = s + inst.processing(order[k - 1]);
  }
  return waits;
}

TEST(PropagateDecrease, ReferenceInstance) {
  const FlowTrace t = propagate_decrease(reference_profile(), 2, 3);
  EXPECT_EQ(t.values, (std::vector<Time>{3, 2, 1, 0, 0}));
  EXPECT_EQ(t.origin, 2);
  EXPECT_EQ(t.last(), 6);
  EXPECT_EQ(objective_delta(t), -3);
}

TEST(PropagateDecrease, ZeroInjection) {
  const FlowTrace t = propagate_decrease(reference_profile(), 1, 0);
  for (Time v : t.values) EXPECT_EQ(v, 0);
  EXPECT_EQ(objective_delta(t), 0);
}

TEST(PropagateDecrease, LeaderAbsorbs) {
  const FlowTrace t = propagate_decrease(reference_profile(), 4, 9);
  EXPECT_EQ(t.at(5), 0);
  EXPECT_EQ(t.at(6), 0);
}

TEST(PropagateIncrease, ReferenceInstanceAbsorbed) {
  const FlowTrace t = propagate_increase(reference_profile(), 4, 5);
  EXPECT_EQ(t.values, (std::vector<Time>{5, 0, 0}));
  EXPECT_EQ(objective_delta(t), 0);
}

TEST(PropagateIncrease, ReferenceInstancePassesThrough) {
  const FlowTrace t = propagate_increase(reference_profile(), 4, 10);
  EXPECT_EQ(t.values, (std::vector<Time>{10, 2, 2}));
  EXPECT_EQ(objective_delta(t), 4);
}

TEST(PropagateIncrease, ZeroInjection) {
  const FlowTrace t = propagate_increase(reference_profile(), 2, 0);
  for (Time v : t.values) EXPECT_EQ(v, 0);
}

TEST(Propagate, RejectsBadArguments) {
  const WaitingProfile prof = reference_profile();
  EXPECT_THROW(propagate_decrease(prof, 0, 1), std::out_of_range);
  EXPECT_THROW(propagate_increase(prof, 6, 1), std::out_of_range);
  EXPECT_THROW(propagate_decrease(prof, 2, -1), std::invalid_argument);
}

TEST(Propagate, TraceBindsToProfile) {
  const Instance inst = reference_instance();
  const WaitingProfile a = compute_profile(inst, initial_sequence(inst));
  const WaitingProfile b = compute_profile(inst, Sequence{{1, 2, 3, 5, 4}});
  const FlowTrace t = propagate_increase(a, 2, 3);
  EXPECT_TRUE(trace_matches(t, a));
#ifndef NDEBUG
  EXPECT_FALSE(trace_matches(t, b));
#endif
}

TEST(FlowObjectiveChange, MatchesTraces) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Instance inst = testing::random_instance(rng, n);
    const WaitingProfile prof =
        compute_profile(inst, testing::random_order(rng, n));
    const Position j = 1 + static_cast<Position>(rng() % n);
    const Time d = static_cast<Time>(rng() % 80);
    EXPECT_EQ(flow_objective_change(prof, j, d),
              objective_delta(propagate_increase(prof, j, d)));
    EXPECT_EQ(flow_objective_change(prof, j, -d),
              objective_delta(propagate_decrease(prof, j, d)));
    EXPECT_EQ(flow_objective_change(prof, n + 1, d), 0);
  }
}

TEST(PropagateDecrease, MatchesPerturbedSimulation) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Instance inst = testing::random_instance(rng, n);
    const auto order = testing::random_order(rng, n);
    const WaitingProfile prof = compute_profile(inst, order);
    const Position j = 1 + static_cast<Position>(rng() % n);
    const Time delta = static_cast<Time>(rng() % 51);
    const FlowTrace t = propagate_decrease(prof, j, delta);

    const Time r = inst.release(order[j - 1]);
    const auto after = forced_waits(
        inst, order, j, r + std::max<Time>(0, prof.wait(j) - delta));
    Time total = 0;
    for (Position k = j; k <= n; ++k) {
      const Time drop = std::max<Time>(0, prof.wait(k)) - after[k - 1];
      ASSERT_EQ(drop, t.at(k + 1)) << "trial " << trial << " k " << k;
      total -= drop;
    }
    ASSERT_EQ(objective_delta(t), total);
  }
}

TEST(PropagateIncrease, MatchesPerturbedSimulation) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Instance inst = testing::random_instance(rng, n);
    const auto order = testing::random_order(rng, n);
    const WaitingProfile prof = compute_profile(inst, order);
    const Position j = 1 + static_cast<Position>(rng() % n);
    const Time delta = static_cast<Time>(rng() % 51);
    const FlowTrace t = propagate_increase(prof, j, delta);

    const Time r = inst.release(order[j - 1]);
    const auto after = forced_waits(
        inst, order, j, r + std::max<Time>(0, prof.wait(j) + delta));
    Time total = 0;
    for (Position k = j; k <= n; ++k) {
      const Time rise = after[k - 1] - std::max<Time>(0, prof.wait(k));
      ASSERT_EQ(rise, t.at(k + 1)) << "trial " << trial << " k " << k;
      total += rise;
    }
    ASSERT_EQ(objective_delta(t), total);
  }
}

TEST(Propagate, MonotoneShapes) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const Instance inst = testing::random_instance(rng, n);
    const WaitingProfile prof =
        compute_profile(inst, testing::random_order(rng, n));
    const Position j = 1 + static_cast<Position>(rng() % n);
    const FlowTrace dec = propagate_decrease(prof, j, 40);
    const FlowTrace inc = propagate_increase(prof, j, 40);
    for (Position k = j; k <= n; ++k) {
      ASSERT_LE(dec.at(k + 1), dec.at(k));
      ASSERT_LE(inc.at(k + 1), inc.at(k));
      if (prof.wait(k) > 0) ASSERT_EQ(inc.at(k + 1), inc.at(k));
    }
  }
}

}  // namespace
}  // namespace optsort
