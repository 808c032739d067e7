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
#include <optional>
#include <string>
#include <vector>

#include "vaov/detail/lower_tracker.hpp"
#include "vaov/errors.hpp"
#include "vaov/instance.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/protocol.hpp"
#include "vaov/types.hpp"

namespace vaov {

// The `lower_set_size(n, is_mover)` outcomes of `party` ranked lowest among
// the available ones. Roles are those of the state's round, pending offer or not.
inline OutcomeSet lower_set(const NegotiationState& state, const Instance& instance, Party party) {
  const OutcomeSet& available = state.available();
  std::size_t remaining = lower_set_size(available.size(), party == state.mover());
  OutcomeSet out(instance.size());
  const auto ranking = instance.order(party).ranking();
  for (auto it = ranking.rbegin(); remaining > 0 && it != ranking.rend(); ++it) {
    if (!available.contains(*it)) continue;
    out.insert(*it);
    --remaining;
  }
  return out;
}

// Partition of O_t induced by the two lower sets.
struct RoundSets {
  OutcomeSet lower_mover;
  OutcomeSet lower_responder;
  OutcomeSet intersection;  // I_t
  OutcomeSet low;           // Low_t
  OutcomeSet jg;            // JG_t = O_t \ Low_t
};

inline RoundSets round_sets(const NegotiationState& state, const Instance& instance) {
  RoundSets s;
  s.lower_mover = lower_set(state, instance, state.mover());
  s.lower_responder = lower_set(state, instance, state.responder());
  s.intersection = s.lower_mover & s.lower_responder;
  s.low = s.lower_mover | s.lower_responder;
  s.jg = state.available() - s.low;
  return s;
}

// Offering rule of the equilibrium: a member of I_t if there is one (the one
// the responder ranks lowest), otherwise the responder's worst available
// outcome. O(m).
inline Outcome offer_spe(const NegotiationState& state, const Instance& instance) {
  if (state.pending_offer()) throw DomainError("offer_spe: an offer is already pending");
  const OutcomeSet& available = state.available();
  const std::size_t n = available.size();
  if (n == 1) return *available.lowest();
  // Mark L^i, then walk L^j from the responder's bottom up to its first
  // member of L^i.
  constexpr std::uint8_t kAvailable = 1, kMoverLower = 2;
  std::vector<std::uint8_t> flags(instance.size(), 0);
  for (Outcome o : available) flags[o.id] = kAvailable;
  const auto mover_ranking = instance.order(state.mover()).ranking();
  std::size_t left = lower_set_size(n, true);
  for (auto it = mover_ranking.rbegin(); left > 0; ++it) {
    if (flags[it->id] == kAvailable) {
      flags[it->id] |= kMoverLower;
      --left;
    }
  }
  const auto responder_ranking = instance.order(state.responder()).ranking();
  std::optional<Outcome> worst;
  left = lower_set_size(n, false);
  for (auto it = responder_ranking.rbegin(); left > 0; ++it) {
    if ((flags[it->id] & kAvailable) == 0) continue;
    if (flags[it->id] & kMoverLower) return *it;
    if (!worst) worst = *it;
    --left;
  }
  return *worst;
}

// The outcome left standing if, from the next round on, every offer follows
// `offer_spe` and every offer is rejected. Simulates that single branch with
// an incremental tracker: O(m) for the whole branch.
inline Outcome continuation_outcome(const NegotiationState& state, const Instance& instance) {
  if (!state.pending_offer()) throw DomainError("continuation_outcome: no pending offer");
  OutcomeSet rest = state.available();
  rest.erase(*state.pending_offer());
  if (rest.size() == 1) return *rest.lowest();
  detail::LowerSetTracker tracker(instance, rest, state.responder());
  while (tracker.available_count() > 1) tracker.reject(tracker.pick());
  return tracker.any_available();
}

// Response rule: accept iff the offer is weakly preferred to the continuation.
// The offer never belongs to its own continuation game, so equality cannot
// occur and the test is effectively strict.
inline Action respond_spe(const NegotiationState& state, const Instance& instance) {
  if (!state.pending_offer()) throw DomainError("respond_spe: no pending offer");
  const Outcome offer = *state.pending_offer();
  if (state.available().size() == 1) return Action::accept();
  const Outcome fallback = continuation_outcome(state, instance);
  return instance.order(state.responder()).weakly_prefers(offer, fallback) ? Action::accept()
                                                                          : Action::reject();
}

class SpePolicy final : public StrategyPolicy {
 public:
  Action act(const NegotiationState& state, const Instance& instance) const override {
    if (state.pending_offer()) return respond_spe(state, instance);
    return Action::offer(offer_spe(state, instance));
  }
};

inline Transcript spe_transcript(const Instance& instance) {
  const SpePolicy policy;
  return run(instance, policy, policy);
}

inline Outcome spe_result(const Instance& instance) { return spe_transcript(instance).result; }

// d_{k,x,t}: available outcomes o with x weakly preferred to o by `party`
// and o outside the party's lower set. Undefined (DomainError) for x inside
// that lower set.
inline std::size_t distance(const Instance& instance, Party party, Outcome x,
                            const NegotiationState& state) {
  if (!state.available().contains(x)) throw DomainError("distance: outcome is not available");
  const OutcomeSet lower = lower_set(state, instance, party);
  if (lower.contains(x)) throw DomainError("distance: outcome lies in the party's lower set");
  const PreferenceOrder& order = instance.order(party);
  std::size_t d = 0;
  for (Outcome o : state.available()) {
    if (order.weakly_prefers(x, o) && !lower.contains(o)) ++d;
  }
  return d;
}

// Offers made by each party under the offering rule, every offer rejected,
// from round 1 until the first round whose intersection I is empty.
struct OfferCounts {
  std::size_t p1 = 0;
  std::size_t p2 = 0;
  std::size_t empty_round = 1;    // t' with I_{t'} empty
  Party mover_at_empty = Party::kP1;

  std::size_t of(Party p) const noexcept { return p == Party::kP1 ? p1 : p2; }
  std::size_t total() const noexcept { return p1 + p2; }
};

inline OfferCounts offers_until_empty_intersection(const Instance& instance) {
  detail::LowerSetTracker tracker(instance, OutcomeSet::full(instance.size()),
                                  instance.first_mover());
  OfferCounts counts;
  while (!tracker.intersection_empty()) {
    (tracker.mover() == Party::kP1 ? counts.p1 : counts.p2) += 1;
    tracker.reject(tracker.pick());
  }
  counts.empty_round = counts.total() + 1;
  counts.mover_at_empty = tracker.mover();
  return counts;
}

// Pareto optimality of `x` within `among`: no other member is preferred to
// it by both parties.
inline bool pareto_optimal(const Instance& instance, Outcome x, const OutcomeSet& among) {
  const PreferenceOrder& a = instance.order(Party::kP1);
  const PreferenceOrder& b = instance.order(Party::kP2);
  for (Outcome o : among) {
    if (o != x && a.prefers(o, x) && b.prefers(o, x)) return false;
  }
  return true;
}

// Walks the equilibrium path and checks, at every offer point, the set
// identities the equilibrium proof rests on: |JG| = |I| + 1, the lower-set
// sizes and their round-to-round evolution by offer type, the continuation
// outcome lying in JG and being Pareto optimal, its invariance under one more
// equilibrium step, and the final result never entering Low_t.
// Returns one message per violation.
inline std::vector<std::string> audit_spe_trace(const Instance& instance) {
  std::vector<std::string> bad;
  auto fail = [&](std::size_t round, const std::string& what) {
    bad.push_back("round " + std::to_string(round) + ": " + what);
  };
  const Transcript transcript = spe_transcript(instance);
  const Outcome result = transcript.result;
  if (!pareto_optimal(instance, result, OutcomeSet::full(instance.size()))) {
    fail(1, "result is not Pareto optimal");
  }
  const OfferCounts counts = offers_until_empty_intersection(instance);
  if (counts.of(other(instance.first_mover())) > counts.of(instance.first_mover())) {
    fail(1, "second mover offers more than the first before I empties");
  }

  NegotiationState state = new_state(instance);
  std::optional<Outcome> previous_continuation;
  std::optional<OutcomeSet> previous_jg;
  while (state.available().size() > 1) {
    const std::size_t t = state.round();
    const std::size_t n = state.available().size();
    const RoundSets sets = round_sets(state, instance);
    if (sets.jg.size() != sets.intersection.size() + 1) fail(t, "|JG| != |I| + 1");
    if (sets.lower_responder.size() != n / 2) fail(t, "responder lower set has wrong size");
    if (sets.lower_mover.size() != lower_set_size(n, true)) fail(t, "mover lower set has wrong size");
    if (!sets.jg.contains(result)) fail(t, "result lies in Low_t");
    if (previous_jg && !sets.jg.is_subset_of(*previous_jg)) fail(t, "JG grew along the path");

    const Outcome offer = offer_spe(state, instance);
    if (!sets.intersection.empty() && !sets.intersection.contains(offer)) {
      fail(t, "offer not drawn from a nonempty I");
    }
    auto offered = std::get<NegotiationState>(apply(state, Action::offer(offer)));
    const Outcome cont = continuation_outcome(offered, instance);
    if (!sets.jg.contains(cont)) fail(t, "continuation outcome outside JG");
    if (!pareto_optimal(instance, cont, state.available())) fail(t, "continuation not Pareto optimal");
    if (!instance.order(state.responder()).prefers(cont, offer)) {
      fail(t, "responder does not prefer the continuation to the offer");
    }
    if (previous_continuation && *previous_continuation != cont) {
      fail(t, "continuation changed after one more equilibrium step");
    }
    if (respond_spe(offered, instance) != Action::reject()) fail(t, "equilibrium offer accepted early");

    state = std::get<NegotiationState>(apply(std::move(offered), Action::reject()));
    const RoundSets next = round_sets(state, instance);
    if (next.lower_mover.size() + 1 != sets.lower_responder.size()) fail(t, "|L_mover(t+1)| != |L_resp(t)| - 1");
    if (next.lower_responder.size() != sets.lower_mover.size()) fail(t, "|L_resp(t+1)| != |L_mover(t)|");
    OutcomeSet just_offered(instance.size());
    just_offered.insert(offer);
    if (!sets.lower_mover.contains(offer) && next.lower_responder != sets.lower_mover) {
      fail(t, "offer outside L_mover but L_resp(t+1) != L_mover(t)");
    }
    if (sets.lower_responder.contains(offer) &&
        next.lower_mover != sets.lower_responder - just_offered) {
      fail(t, "offer inside L_resp but L_mover(t+1) != L_resp(t) \\ {o}");
    }
    if (sets.lower_mover.contains(offer)) {
      const OutcomeSet kept = sets.lower_mover - just_offered;
      if (!kept.is_subset_of(next.lower_responder) || (next.lower_responder - kept).size() != 1) {
        fail(t, "offer inside L_mover but L_resp(t+1) is not L_mover(t) \\ {o} plus one");
      }
    }
    previous_continuation = cont;
    previous_jg = sets.jg;
  }
  if (previous_continuation && *previous_continuation != result) {
    fail(state.round(), "path result differs from the continuation outcome");
  }
  return bad;
}

}  // namespace vaov
