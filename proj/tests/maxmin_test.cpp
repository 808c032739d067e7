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

Outcome worst_in(const PreferenceOrder& order, const OutcomeSet& set) {
  Outcome w = *set.lowest();
  for (Outcome o : set) {
    if (order.prefers(w, o)) w = o;
  }
  return w;
}

Outcome best_in(const PreferenceOrder& order, const OutcomeSet& set) {
  for (Outcome o : order.ranking()) {
    if (set.contains(o)) return o;
  }
  return *set.lowest();
}

TEST(Maxmin, UpperSetComplementsLowerSet) {
  const Instance in = reference::disjoint_lower_sets();
  const NegotiationState s = new_state(in);
  // p1 is the mover at |O| = 6, so two outcomes are vetoable for it.
  EXPECT_EQ(upper_set(s, in, Party::kP1).size(), 4U);
  EXPECT_EQ(upper_set(s, in, Party::kP2).size(), 3U);
}

TEST(Maxmin, OffersComeFromUpperSet) {
  const Instance in = reference::disjoint_lower_sets();
  const NegotiationState s = new_state(in);
  const OutcomeSet upper = upper_set(s, in, Party::kP1);
  EXPECT_TRUE(upper.contains(offer_maxmin(s, in, Party::kP1, MaxminMode::kArbitrary)));
  EXPECT_EQ(offer_maxmin(s, in, Party::kP1, MaxminMode::kHeuristic), Outcome{5});
  EXPECT_THROW(offer_maxmin(s, in, Party::kP2, MaxminMode::kArbitrary), DomainError);
}

// Against a pure minimizer, both maxmin variants end inside the focal
// party's first-round upper set; the adversary is the unmemoized reference.
TEST(Maxmin, GuaranteeAgainstReferenceAdversary) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      for_each_instance(m, first, [&](const Instance& in) {
        for (Party focal : {Party::kP1, Party::kP2}) {
          const OutcomeSet upper = upper_set(new_state(in), in, focal);
          for (MaxminMode mode : {MaxminMode::kArbitrary, MaxminMode::kHeuristic}) {
            const MaxminPolicy policy(mode);
            const PreferenceOrder rev = in.order(focal).reversed();
            naive::Game g{in, {&in.order(Party::kP1), &in.order(Party::kP2)}};
            g.score[index_of(other(focal))] = &rev;
            g.policy[index_of(focal)] = &policy;
            const Outcome worst = g.root();
            ASSERT_TRUE(upper.contains(worst));
            ASSERT_EQ(adversarial_value(in, focal, &policy), worst);
          }
        }
      });
    }
  }
}

TEST(Maxmin, BothMaxminEndsInJointGoodSet) {
  Rng rng(31);
  const MaxminPolicy a(MaxminMode::kArbitrary);
  const MaxminPolicy h(MaxminMode::kHeuristic);
  for (int i = 0; i < 1000; ++i) {
    const Instance in = random_instance(1 + rng.below(20), rng, rng.below(2) == 0 ? Party::kP1 : Party::kP2);
    const RoundSets sets = round_sets(new_state(in), in);
    EXPECT_TRUE(sets.jg.contains(run(in, a, a).result));
    EXPECT_TRUE(sets.jg.contains(run(in, h, a).result));
    EXPECT_TRUE(sets.jg.contains(run(in, h, h).result));
  }
}

TEST(Maxmin, InformedPartyGetsItsBestOfOpponentUpperSet) {
  const MaxminPolicy maxmin;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      for_each_instance(m, first, [&](const Instance& in) {
        for (Party informed : {Party::kP1, Party::kP2}) {
          const InformedPolicy policy(informed);
          const OutcomeSet target = upper_set(new_state(in), in, other(informed));
          const Transcript t =
              informed == Party::kP1 ? run(in, policy, maxmin) : run(in, maxmin, policy);
          ASSERT_EQ(t.result, best_in(in.order(informed), target));
        }
      });
    }
  }
}

TEST(Maxmin, OppositeOrderPinsBottomOfUpperSet) {
  const MaxminPolicy maxmin;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      const auto own = PreferenceOrder::identity(m);
      for (Party focal : {Party::kP1, Party::kP2}) {
        const Instance in = focal == Party::kP1 ? Instance(own, own.reversed(), first)
                                                : Instance(own.reversed(), own, first);
        const OutcomeSet upper = upper_set(new_state(in), in, focal);
        EXPECT_EQ(run(in, maxmin, maxmin).result, worst_in(own, upper));
      }
    }
  }
}

}  // namespace
}  // namespace vaov
