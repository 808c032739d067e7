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

#include <set>
#include <vector>

#include "vaov/random.hpp"
#include "vaov/rc.hpp"
#include "vaov/reference_instances.hpp"
#include "vaov/spe.hpp"

namespace vaov {
namespace {

// Top-v sets compared directly.
std::pair<std::set<std::uint32_t>, std::size_t> naive_rc(const Instance& in) {
  for (std::size_t v = 1; v <= in.size(); ++v) {
    std::set<std::uint32_t> a, both;
    for (std::size_t r = 0; r < v; ++r) a.insert(in.order(Party::kP1).at(r).id);
    for (std::size_t r = 0; r < v; ++r) {
      const auto id = in.order(Party::kP2).at(r).id;
      if (a.count(id)) both.insert(id);
    }
    if (!both.empty()) return {both, v};
  }
  return {{}, 0};
}

std::set<std::uint32_t> as_set(const RcResult& r) {
  std::set<std::uint32_t> out;
  for (Outcome o : r.outcomes) out.insert(o.id);
  return out;
}

TEST(RcSet, ReferenceInstances) {
  const RcResult a = rc_set(reference::disjoint_lower_sets());
  EXPECT_EQ(as_set(a), (std::set<std::uint32_t>{2, 5}));
  EXPECT_EQ(a.v_star, 4U);
  const RcResult b = rc_set(reference::overlapping_lower_sets());
  EXPECT_EQ(as_set(b), (std::set<std::uint32_t>{5}));
  EXPECT_EQ(b.v_star, 3U);
  const auto order = PreferenceOrder::from_ids({2, 0, 3, 1});
  const RcResult c = rc_set(Instance(order, order));
  EXPECT_EQ(as_set(c), (std::set<std::uint32_t>{2}));
  EXPECT_EQ(c.v_star, 1U);
}

TEST(RcSet, MatchesDirectTopSets) {
  Rng rng(21);
  for (int i = 0; i < 3000; ++i) {
    const Instance in = random_instance(1 + rng.below(30), rng);
    const RcResult r = rc_set(in);
    const auto [expected, v] = naive_rc(in);
    ASSERT_EQ(as_set(r), expected);
    ASSERT_EQ(r.v_star, v);
    ASSERT_LE(r.outcomes.size(), 2U);
    ASSERT_TRUE(r.outcomes.size() < 2 || r.outcomes[0] < r.outcomes[1]);
  }
}

// The distance form is only defined on JG_1, so it is compared where the
// RC set lies inside JG_1.
TEST(RcSet, DistanceFormMatchesInsideJointGoodSet) {
  std::size_t compared = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      for_each_instance(m, first, [&](const Instance& in) {
        const RcResult r = rc_set(in);
        const OutcomeSet jg = round_sets(new_state(in), in).jg;
        for (Outcome o : r.outcomes) {
          if (!jg.contains(o)) return;
        }
        ++compared;
        ASSERT_EQ(rc_by_distance(in), r.outcomes);
      });
    }
  }
  EXPECT_EQ(compared, 2U + 4U + 72U + 960U + 28800U);
}

TEST(RcRelations, AllClausesOnSmallInstances) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (Party first : {Party::kP1, Party::kP2}) {
      for_each_instance(m, first, [&](const Instance& in) {
        const RelationReport r = verify_rc_relations(in);
        for (const auto& c : r.clauses) ASSERT_TRUE(c.passed) << c.name << ": " << c.detail;
      });
    }
  }
}

TEST(RcRelations, ReportOnReferenceInstance) {
  const RelationReport r = verify_rc_relations(reference::disjoint_lower_sets());
  EXPECT_EQ(r.spe, Outcome{2});
  EXPECT_EQ(r.spe_swapped, Outcome{5});
  ASSERT_EQ(r.clauses.size(), 5U);
  EXPECT_TRUE(r.clauses[2].applicable);  // swap-pair
  EXPECT_TRUE(r.all_passed());
}

TEST(MonotoneExtension, KeepsOldOrderAndPlacesNewOutcomesAbove) {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = 3 + rng.below(6);
    const Instance in = random_instance(m, rng);
    const Outcome eq = spe_result(in);
    const std::size_t extra = 1 + rng.below(3);
    const Instance ext = monotone_extension(in, extra, rng.next());
    ASSERT_EQ(ext.size(), m + extra);
    for (Party p : {Party::kP1, Party::kP2}) {
      std::vector<Outcome> old;
      for (Outcome o : ext.order(p).ranking()) {
        if (o.id < m) old.push_back(o);
        else EXPECT_TRUE(ext.order(p).prefers(o, eq));
      }
      EXPECT_EQ(old, std::vector<Outcome>(in.order(p).ranking().begin(), in.order(p).ranking().end()));
    }
    const Outcome grown = spe_result(ext);
    EXPECT_TRUE(ext.order(Party::kP1).prefers(grown, eq));
    EXPECT_TRUE(ext.order(Party::kP2).prefers(grown, eq));
  }
}

TEST(MonotoneExtension, SeedDeterminesResult) {
  const Instance in = reference::overlapping_lower_sets();
  EXPECT_EQ(monotone_extension(in, 2, 99), monotone_extension(in, 2, 99));
}

}  // namespace
}  // namespace vaov
