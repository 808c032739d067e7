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

#include <optional>
#include <utility>

#include "vaov/errors.hpp"
#include "vaov/instance.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/protocol.hpp"
#include "vaov/spe.hpp"
#include "vaov/types.hpp"

namespace vaov {

// U^k_t = O_t \ L^k_t: what party k can still secure from this round on.
inline OutcomeSet upper_set(const NegotiationState& state, const Instance& instance, Party party) {
  return state.available() - lower_set(state, instance, party);
}

enum class MaxminMode { kArbitrary, kHeuristic };

// kArbitrary: lowest id in U (any member carries the guarantee).
// kHeuristic: the party's favourite member of U, which is its top available.
inline Outcome offer_maxmin(const NegotiationState& state, const Instance& instance, Party party,
                            MaxminMode mode) {
  if (state.pending_offer() || state.mover() != party) {
    throw DomainError("offer_maxmin: party is not the mover");
  }
  const OutcomeSet upper = upper_set(state, instance, party);
  if (mode == MaxminMode::kArbitrary) return *upper.lowest();
  for (Outcome o : instance.order(party).ranking()) {
    if (upper.contains(o)) return o;
  }
  throw DomainError("offer_maxmin: empty upper set");
}

inline Action respond_maxmin(const NegotiationState& state, const Instance& instance, Party party) {
  if (!state.pending_offer() || state.responder() != party) {
    throw DomainError("respond_maxmin: party is not responding to an offer");
  }
  if (state.available().size() == 1) return Action::accept();
  return upper_set(state, instance, party).contains(*state.pending_offer()) ? Action::accept()
                                                                            : Action::reject();
}

class MaxminPolicy final : public StrategyPolicy {
 public:
  explicit MaxminPolicy(MaxminMode mode = MaxminMode::kArbitrary) : mode_(mode) {}

  Action act(const NegotiationState& state, const Instance& instance) const override {
    const Party self = state.acting_party();
    if (state.pending_offer()) return respond_maxmin(state, instance, self);
    return Action::offer(offer_maxmin(state, instance, self, mode_));
  }

 private:
  MaxminMode mode_;
};

// Full-information party facing an opponent assumed to play maxmin. It aims
// for its favourite member of the opponent's current upper set: it offers
// that member, and accepts an offer only if the offer is at least as good as
// what it could offer (and have accepted) in the next round.
class InformedPolicy final : public StrategyPolicy {
 public:
  explicit InformedPolicy(Party informed) : informed_(informed) {}

  Party informed() const noexcept { return informed_; }

  Action act(const NegotiationState& state, const Instance& instance) const override {
    if (state.acting_party() != informed_) throw DomainError("InformedPolicy queried for the opponent");
    if (!state.pending_offer()) return Action::offer(target(state, instance));
    const Outcome offer = *state.pending_offer();
    if (state.available().size() == 1) return Action::accept();
    OutcomeSet rest = state.available();
    rest.erase(offer);
    const NegotiationState next = NegotiationState::from_available(instance, std::move(rest));
    return instance.order(informed_).weakly_prefers(offer, target(next, instance)) ? Action::accept()
                                                                                   : Action::reject();
  }

 private:
  Outcome target(const NegotiationState& state, const Instance& instance) const {
    const OutcomeSet upper = upper_set(state, instance, other(informed_));
    for (Outcome o : instance.order(informed_).ranking()) {
      if (upper.contains(o)) return o;
    }
    return *state.available().lowest();
  }

  Party informed_;
};

inline InformedPolicy informed_policy(const Instance&, Party informed) { return InformedPolicy(informed); }

}  // namespace vaov
