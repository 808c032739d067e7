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
#include <utility>
#include <variant>
#include <vector>

#include "vaov/errors.hpp"
#include "vaov/instance.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/types.hpp"

namespace vaov {

enum class ActionKind : std::uint8_t { kOffer, kAccept, kReject };

struct Action {
  ActionKind kind = ActionKind::kOffer;
  Outcome outcome{};  // meaningful for offers only

  static Action offer(Outcome o) { return Action{ActionKind::kOffer, o}; }
  static Action accept() { return Action{ActionKind::kAccept, {}}; }
  static Action reject() { return Action{ActionKind::kReject, {}}; }

  friend bool operator==(const Action& a, const Action& b) {
    if (a.kind != b.kind) return false;
    return a.kind != ActionKind::kOffer || a.outcome == b.outcome;
  }
};

inline std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::kOffer: return "offer";
    case ActionKind::kAccept: return "accept";
    case ActionKind::kReject: return "reject";
  }
  return "?";
}

struct Event {
  std::size_t round = 1;
  Party actor = Party::kP1;
  Action action;

  friend bool operator==(const Event&, const Event&) = default;
};

// Snapshot of a negotiation between actions. Values are immutable; `apply`
// produces successors.
class NegotiationState {
 public:
  const OutcomeSet& available() const noexcept { return available_; }
  std::size_t round() const noexcept { return round_; }
  Party mover() const noexcept { return mover_; }
  Party responder() const noexcept { return other(mover_); }
  const std::optional<Outcome>& pending_offer() const noexcept { return pending_; }
  const std::vector<Event>& history() const noexcept { return history_; }

  // Party expected to act next: the responder while an offer is pending.
  Party acting_party() const noexcept { return pending_ ? responder() : mover_; }

  // Builds a mid-game state from the available set alone. The round and mover
  // follow from |available|; the history is left empty. Strategies in this
  // library read only (available, mover, pending), so such states are valid
  // inputs for analysis and for the exhaustive solvers.
  static NegotiationState from_available(const Instance& instance, OutcomeSet available,
                                         std::optional<Outcome> pending = std::nullopt) {
    if (available.universe() != instance.size()) {
      throw ValidationError("available", "universe does not match the instance");
    }
    if (available.empty()) throw ValidationError("available", "no outcome available");
    if (pending && !available.contains(*pending)) {
      throw ValidationError("pending_offer", "pending offer is not available");
    }
    NegotiationState s;
    s.round_ = instance.size() - available.size() + 1;
    s.mover_ = instance.mover_at(s.round_);
    s.available_ = std::move(available);
    s.pending_ = pending;
    return s;
  }

 private:
  friend NegotiationState new_state(const Instance& instance);
  friend struct StepAccess;

  OutcomeSet available_;
  std::size_t round_ = 1;
  Party mover_ = Party::kP1;
  std::optional<Outcome> pending_;
  std::vector<Event> history_;
};

struct TerminalResult {
  Outcome result;
  std::vector<Event> history;
};

using StepResult = std::variant<NegotiationState, TerminalResult>;

inline NegotiationState new_state(const Instance& instance) {
  NegotiationState s;
  s.available_ = OutcomeSet::full(instance.size());
  s.round_ = 1;
  s.mover_ = instance.first_mover();
  return s;
}

inline std::vector<Action> legal_actions(const NegotiationState& state) {
  std::vector<Action> actions;
  if (state.pending_offer()) {
    actions.push_back(Action::accept());
    if (state.available().size() > 1) actions.push_back(Action::reject());
    return actions;
  }
  actions.reserve(state.available().size());
  for (Outcome o : state.available()) actions.push_back(Action::offer(o));
  return actions;
}

inline bool is_legal(const NegotiationState& state, const Action& action) {
  switch (action.kind) {
    case ActionKind::kOffer:
      return !state.pending_offer() && state.available().contains(action.outcome);
    case ActionKind::kAccept:
      return state.pending_offer().has_value();
    case ActionKind::kReject:
      return state.pending_offer().has_value() && state.available().size() > 1;
  }
  return false;
}

// The protocol's forced end: one outcome left and it is on the table.
inline std::optional<Outcome> forced_result(const NegotiationState& state) {
  if (state.available().size() == 1 && state.pending_offer()) return state.pending_offer();
  return std::nullopt;
}

struct StepAccess {
  static StepResult apply(NegotiationState state, const Action& action) {
    const Party actor = state.acting_party();
    switch (action.kind) {
      case ActionKind::kOffer:
        if (state.pending_offer()) {
          throw ProtocolError("round " + std::to_string(state.round_) +
                              ": offer made while an offer is pending");
        }
        if (!state.available_.contains(action.outcome)) {
          throw ProtocolError("round " + std::to_string(state.round_) + ": outcome " +
                              std::to_string(action.outcome.id) +
                              " is not available (no offer can be made twice)");
        }
        state.pending_ = action.outcome;
        break;
      case ActionKind::kAccept: {
        if (!state.pending_offer()) {
          throw ProtocolError("round " + std::to_string(state.round_) +
                              ": accept with no pending offer");
        }
        state.history_.push_back(Event{state.round_, actor, action});
        return TerminalResult{*state.pending_, std::move(state.history_)};
      }
      case ActionKind::kReject:
        if (!state.pending_offer()) {
          throw ProtocolError("round " + std::to_string(state.round_) +
                              ": reject with no pending offer");
        }
        if (state.available_.size() == 1) {
          throw ProtocolError("round " + std::to_string(state.round_) +
                              ": the last available outcome cannot be rejected");
        }
        state.history_.push_back(Event{state.round_, actor, action});
        state.available_.erase(*state.pending_);
        state.pending_.reset();
        ++state.round_;
        state.mover_ = other(state.mover_);
        return state;
    }
    state.history_.push_back(Event{state.round_, actor, action});
    return state;
  }
};

// Throws ProtocolError naming the violated rule when `action` is illegal.
inline StepResult apply(NegotiationState state, const Action& action) {
  return StepAccess::apply(std::move(state), action);
}

// Decision rule for one party. Implementations must be deterministic and
// depend only on the available set, the roles and the pending offer; the
// exhaustive solvers memoize on exactly that.
class StrategyPolicy {
 public:
  virtual ~StrategyPolicy() = default;
  virtual Action act(const NegotiationState& state, const Instance& instance) const = 0;
};

struct Transcript {
  std::vector<Event> events;
  Outcome result;
  std::optional<std::uint64_t> seed;

  std::vector<Outcome> offers() const {
    std::vector<Outcome> out;
    for (const Event& e : events) {
      if (e.action.kind == ActionKind::kOffer) out.push_back(e.action.outcome);
    }
    return out;
  }
};

// Drives two policies to termination. When a single outcome remains the
// engine offers it on the mover's behalf and ends the negotiation without
// querying either policy; the forced offer is recorded, no accept is.
inline Transcript run(const Instance& instance, const StrategyPolicy& policy_p1,
                      const StrategyPolicy& policy_p2) {
  NegotiationState state = new_state(instance);
  for (;;) {
    if (!state.pending_offer() && state.available().size() == 1) {
      const Outcome last = *state.available().lowest();
      auto step = apply(std::move(state), Action::offer(last));
      auto& final_state = std::get<NegotiationState>(step);
      return Transcript{final_state.history(), last, std::nullopt};
    }
    const Party actor = state.acting_party();
    const StrategyPolicy& policy = actor == Party::kP1 ? policy_p1 : policy_p2;
    const Action action = policy.act(state, instance);
    if (!is_legal(state, action)) {
      throw ProtocolError(std::string(to_string(actor)) + " chose an illegal " +
                          to_string(action.kind) + " in round " + std::to_string(state.round()));
    }
    StepResult step = apply(std::move(state), action);
    if (auto* done = std::get_if<TerminalResult>(&step)) {
      return Transcript{std::move(done->history), done->result, std::nullopt};
    }
    state = std::move(std::get<NegotiationState>(step));
  }
}

// Folds `events` through the state machine and returns the result they
// determine. Throws ProtocolError on an illegal or incomplete sequence, or
// when an event's round/actor disagrees with the state.
inline Outcome replay(const Instance& instance, const std::vector<Event>& events) {
  NegotiationState state = new_state(instance);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (e.round != state.round() || e.actor != state.acting_party()) {
      throw ProtocolError("event " + std::to_string(i) + " has round/actor out of turn");
    }
    StepResult step = apply(std::move(state), e.action);
    if (auto* done = std::get_if<TerminalResult>(&step)) {
      if (i + 1 != events.size()) throw ProtocolError("events continue after acceptance");
      return done->result;
    }
    state = std::move(std::get<NegotiationState>(step));
  }
  if (auto forced = forced_result(state)) return *forced;
  throw ProtocolError("transcript ends before the negotiation does");
}

}  // namespace vaov
