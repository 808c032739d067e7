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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vaov/instance.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/protocol.hpp"
#include "vaov/random.hpp"
#include "vaov/spe.hpp"
#include "vaov/types.hpp"

namespace vaov {

// Rational Compromise: deepen v until the two top-v sets meet.
struct RcResult {
  std::vector<Outcome> outcomes;  // one or two, ascending id
  std::size_t v_star = 0;

  bool contains(Outcome o) const {
    for (Outcome x : outcomes) {
      if (x == o) return true;
    }
    return false;
  }
};

inline RcResult rc_set(const Instance& instance) {
  const std::size_t m = instance.size();
  const PreferenceOrder& a = instance.order(Party::kP1);
  const PreferenceOrder& b = instance.order(Party::kP2);
  std::vector<std::uint8_t> in_a(m, 0), in_b(m, 0);
  RcResult rc;
  for (std::size_t v = 1; v <= m; ++v) {
    const Outcome x = a.at(v - 1);
    const Outcome y = b.at(v - 1);
    in_a[x.id] = 1;
    in_b[y.id] = 1;
    if (in_b[x.id]) rc.outcomes.push_back(x);
    if (x != y && in_a[y.id]) rc.outcomes.push_back(y);
    if (!rc.outcomes.empty()) {
      if (rc.outcomes.size() == 2 && rc.outcomes[1] < rc.outcomes[0]) {
        std::swap(rc.outcomes[0], rc.outcomes[1]);
      }
      rc.v_star = v;
      return rc;
    }
  }
  return rc;  // unreachable: at v = m both sets are the whole universe
}

// The rule as a max-min over distances at round 1:
//   argmax_x min_k (d_{k,x,1} + |L^k_1| - 1).
// d is only defined outside each party's lower set, so candidates are
// restricted to JG_1. Depends on the first mover through L^k_1; agrees with
// rc_set whenever rc_set lies inside JG_1.
inline std::vector<Outcome> rc_by_distance(const Instance& instance) {
  const NegotiationState root = new_state(instance);
  const RoundSets sets = round_sets(root, instance);
  std::vector<Outcome> best;
  std::size_t best_score = 0;
  for (Outcome x : sets.jg) {
    std::size_t score = SIZE_MAX;
    for (Party k : {Party::kP1, Party::kP2}) {
      const std::size_t lower = lower_set(root, instance, k).size();
      score = std::min(score, distance(instance, k, x, root) + lower - 1);
    }
    if (best.empty() || score > best_score) {
      best = {x};
      best_score = score;
    } else if (score == best_score) {
      best.push_back(x);
    }
  }
  return best;
}

struct ClauseCheck {
  std::string name;
  bool applicable = false;  // premise held
  bool passed = true;
  std::string detail;
};

struct RelationReport {
  Outcome spe{};
  Outcome spe_swapped{};
  RcResult rc;
  OfferCounts counts;
  std::vector<ClauseCheck> clauses;

  bool all_passed() const {
    for (const auto& c : clauses) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Checks how the equilibrium result relates to the RC set:
//   membership   o_eq is in RC
//   singleton    |RC| = 1 implies o_eq is that outcome
//   swap-pair    results differing under swapped first mover means RC is that pair
//   parity       m - (l1 + l2) odd implies |RC| = 1
//   two-element  |RC| = 2 implies o_eq is the member preferred by the party
//                responding in the first round whose I is empty
inline RelationReport verify_rc_relations(const Instance& instance) {
  RelationReport r;
  r.spe = spe_result(instance);
  r.spe_swapped = spe_result(instance.with_first_mover(other(instance.first_mover())));
  r.rc = rc_set(instance);
  r.counts = offers_until_empty_intersection(instance);
  const std::size_t m = instance.size();
  const std::size_t ell = r.counts.total();

  ClauseCheck membership{"membership", true, r.rc.contains(r.spe), ""};
  if (!membership.passed) membership.detail = "o_eq " + std::to_string(r.spe.id) + " not in RC";
  r.clauses.push_back(membership);

  ClauseCheck singleton{"singleton", r.rc.outcomes.size() == 1, true, ""};
  if (singleton.applicable) singleton.passed = r.rc.outcomes[0] == r.spe;
  r.clauses.push_back(singleton);

  ClauseCheck swap{"swap-pair", r.spe != r.spe_swapped, true, ""};
  if (swap.applicable) {
    swap.passed = r.rc.outcomes.size() == 2 && r.rc.contains(r.spe) && r.rc.contains(r.spe_swapped);
  }
  r.clauses.push_back(swap);

  ClauseCheck parity{"parity", (m % 2 == 1) == (ell % 2 == 0), true, ""};
  if (parity.applicable) parity.passed = r.rc.outcomes.size() == 1;
  r.clauses.push_back(parity);

  ClauseCheck pair{"two-element", r.rc.outcomes.size() == 2, true, ""};
  if (pair.applicable) {
    const Outcome rest = r.rc.outcomes[0] == r.spe ? r.rc.outcomes[1] : r.rc.outcomes[0];
    const Party judge = other(r.counts.mover_at_empty);
    pair.passed = r.rc.contains(r.spe) && instance.order(judge).prefers(r.spe, rest);
    // First-mover form: odd l1 + l2 means the first mover prefers o_eq.
    const Party first_form = ell % 2 == 1 ? instance.first_mover() : other(instance.first_mover());
    pair.passed = pair.passed && first_form == judge;
  }
  r.clauses.push_back(pair);

  for (auto& c : r.clauses) {
    if (!c.passed && c.detail.empty()) c.detail = "clause violated";
  }
  return r;
}

// A random instance satisfying the monotonicity premise: `extra` new
// outcomes (ids m, m+1, ...) are inserted into both orders at seeded positions
// strictly above the original equilibrium result, keeping the relative order
// of the old outcomes.
inline Instance monotone_extension(const Instance& instance, std::size_t extra, std::uint64_t seed) {
  const Outcome anchor = spe_result(instance);
  Rng rng(seed);
  const std::size_t m = instance.size();
  std::vector<std::uint32_t> orders[2];
  for (std::size_t k = 0; k < 2; ++k) {
    for (Outcome o : instance.order(static_cast<Party>(k)).ranking()) orders[k].push_back(o.id);
  }
  for (std::size_t j = 0; j < extra; ++j) {
    const auto id = static_cast<std::uint32_t>(m + j);
    for (auto& order : orders) {
      const auto anchor_pos = static_cast<std::size_t>(
          std::find(order.begin(), order.end(), anchor.id) - order.begin());
      const auto pos = static_cast<std::ptrdiff_t>(rng.below(anchor_pos + 1));
      order.insert(order.begin() + pos, id);
    }
  }
  return Instance(PreferenceOrder::from_ids(orders[0]), PreferenceOrder::from_ids(orders[1]),
                  instance.first_mover());
}

}  // namespace vaov
