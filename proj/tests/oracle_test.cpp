// Copyright 2026 The vaov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "support/naive.hpp"
#include "vaov/maxmin.hpp"
#include "vaov/oracle.hpp"
#include "vaov/random.hpp"
#include "vaov/reference_instances.hpp"
#include "vaov/spe.hpp"

namespace vaov {
namespace {

TEST(Oracle, MemoizedAgreesWithUnmemoizedSolver) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      for_each_instance(m, first, [&](const Instance& in) {
        const naive::Game g{in, {&in.order(Party::kP1), &in.order(Party::kP2)}};
        ASSERT_EQ(solve_spe(in).value, g.root());
      });
    }
  }
}

TEST(Oracle, AdversarialValueAgreesWithUnmemoizedSolver) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for_each_instance(m, Party::kP1, [&](const Instance& in) {
      for (Party focal : {Party::kP1, Party::kP2}) {
        const PreferenceOrder rev = in.order(focal).reversed();
        naive::Game g{in, {&in.order(Party::kP1), &in.order(Party::kP2)}};
        g.score[index_of(other(focal))] = &rev;
        ASSERT_EQ(adversarial_value(in, focal), g.root());
      }
    });
  }
}

TEST(Oracle, ReferenceInstances) {
  EXPECT_EQ(solve_spe(reference::disjoint_lower_sets()).value, Outcome{2});
  EXPECT_EQ(solve_spe(reference::overlapping_lower_sets()).value, Outcome{5});
}

TEST(Oracle, ValueIsParetoOptimalAndOutsideLowerSets) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Instance in = random_instance(1 + rng.below(9), rng, rng.below(2) == 0 ? Party::kP1 : Party::kP2);
    const Outcome v = solve_spe(in).value;
    const RoundSets sets = round_sets(new_state(in), in);
    EXPECT_FALSE(sets.low.contains(v));
    EXPECT_TRUE(pareto_optimal(in, v, OutcomeSet::full(in.size())));
    for (Party focal : {Party::kP1, Party::kP2}) {
      EXPECT_TRUE(in.order(focal).weakly_prefers(v, adversarial_value(in, focal)));
    }
  }
}

TEST(Oracle, UniqueEquilibriumOutcomes) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(verify_uniqueness(random_instance(1 + rng.below(8), rng)));
  }
}

TEST(Oracle, SolvedEntriesMatchSpeStrategy) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const Instance in = random_instance(2 + rng.below(7), rng);
    const SpeSolution sol = solve_spe(in);
    sol.table.for_each_entry([&](const SolveKey& key, const SolveEntry& e) {
      const auto state = NegotiationState::from_available(in, to_outcome_set(key.available, in.size()));
      if (state.mover() != key.mover) return;
      const Outcome o = offer_spe(state, in);
      EXPECT_TRUE((e.optimal_offers >> o.id) & 1U);
    });
  }
}

TEST(Oracle, RefusesOversizedInstances) {
  Rng rng(44);
  EXPECT_THROW(solve_spe(random_instance(kDefaultSolveBound + 1, rng)), CapacityError);
  EXPECT_THROW(solve_spe(random_instance(6, rng), 5), CapacityError);
}

TEST(Oracle, MaskConversionsRoundTrip) {
  const OutcomeSet s(7, {0, 3, 6});
  EXPECT_EQ(to_mask(s), 0b1001001U);
  EXPECT_EQ(to_outcome_set(to_mask(s), 7), s);
}

TEST(AdversaryPolicy, PlaysTheMinimizingLine) {
  Rng rng(45);
  const MaxminPolicy maxmin;
  for (int i = 0; i < 200; ++i) {
    const Instance in = random_instance(1 + rng.below(7), rng, rng.below(2) == 0 ? Party::kP1 : Party::kP2);
    for (Party focal : {Party::kP1, Party::kP2}) {
      const AdversaryPolicy adversary(in, focal, &maxmin);
      const Transcript t = focal == Party::kP1 ? run(in, maxmin, adversary) : run(in, adversary, maxmin);
      EXPECT_EQ(t.result, adversarial_value(in, focal, &maxmin));
    }
  }
}

// Against a maxmin opponent whose order is unknown, no first action of the
// focal party beats maxmin's worst case.
TEST(RobustEquilibrium, MaxminIsRobustOnSmallInstances) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const PreferenceOrder& own : all_orders(m)) {
      for (Party focal : {Party::kP1, Party::kP2}) {
        for (Party first : {Party::kP1, Party::kP2}) {
          const RobustCheck c = check_robust_equilibrium(own, focal, first);
          ASSERT_TRUE(c.passed) << c.detail;
          ASSERT_EQ(c.pair_worst, c.bottom_of_upper);
        }
      }
    }
  }
}

}  // namespace
}  // namespace vaov
