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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vaov/errors.hpp"
#include "vaov/instance.hpp"
#include "vaov/maxmin.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/protocol.hpp"
#include "vaov/random.hpp"
#include "vaov/types.hpp"

namespace vaov {

using Mask = std::uint32_t;

inline constexpr std::size_t kDefaultSolveBound = 20;
inline constexpr std::size_t kMaxSolveBound = 24;

inline OutcomeSet to_outcome_set(Mask mask, std::size_t m) {
  OutcomeSet s(m);
  while (mask != 0) {
    s.insert(Outcome{static_cast<std::uint32_t>(std::countr_zero(mask))});
    mask &= mask - 1;
  }
  return s;
}

inline Mask to_mask(const OutcomeSet& set) {
  if (set.universe() > 32) throw CapacityError("outcome set too large for a solver mask");
  return static_cast<Mask>(set.low_word());
}

// Subgame identity. The payoff is the agreed outcome alone, so the value of a
// subgame depends only on what is still available and who offers next.
struct SolveKey {
  Mask available = 0;
  Party mover = Party::kP1;
};

struct SolveEntry {
  Outcome value;
  Mask optimal_offers = 0;  // offers inducing `value`
};

// How one party chooses in the solver: follow a fixed policy, or pick the
// actions whose induced result ranks highest in `objective`.
struct PartyControl {
  const StrategyPolicy* policy = nullptr;
  PreferenceOrder objective;

  static PartyControl follow(const StrategyPolicy& p) { return PartyControl{&p, {}}; }
  static PartyControl maximize(PreferenceOrder order) { return PartyControl{nullptr, std::move(order)}; }
};

// Memoized backward induction over (available, mover). Subgames are solved
// lazily on first request; the table has 2^(m+1) slots.
class GameSolver {
 public:
  GameSolver(Instance instance, std::array<PartyControl, 2> controls,
             std::size_t bound = kDefaultSolveBound)
      : instance_(std::move(instance)), controls_(std::move(controls)) {
    const std::size_t m = instance_.size();
    if (bound > kMaxSolveBound) bound = kMaxSolveBound;
    if (m > bound) {
      throw CapacityError("exhaustive solve limited to m <= " + std::to_string(bound) + ", got " +
                          std::to_string(m));
    }
    values_.assign(std::size_t{2} << m, kUnsolved);
    optimal_.assign(std::size_t{2} << m, 0);
  }

  const Instance& instance() const noexcept { return instance_; }
  Mask full_mask() const noexcept { return static_cast<Mask>((std::uint64_t{1} << instance_.size()) - 1); }

  Outcome root() { return value(full_mask(), instance_.first_mover()); }

  // Result of the subgame where `mover` is about to offer from `available`.
  Outcome value(Mask available, Party mover) {
    if (std::popcount(available) == 1) return Outcome{static_cast<std::uint32_t>(std::countr_zero(available))};
    const std::size_t slot = slot_of(available, mover);
    if (values_[slot] == kUnsolved) solve(available, mover, slot);
    return Outcome{values_[slot]};
  }

  // Whether the responder takes offer `o` made by `mover` from `available`.
  bool responder_accepts(Mask available, Party mover, Outcome o) {
    const Mask rest = available & ~bit(o);
    if (rest == 0) return true;
    const Party responder = other(mover);
    const Outcome fallback = value(rest, responder);
    const PartyControl& ctrl = controls_[index_of(responder)];
    if (ctrl.policy != nullptr) {
      const NegotiationState state =
          NegotiationState::from_available(instance_, to_outcome_set(available, instance_.size()), o);
      const Action a = ctrl.policy->act(state, instance_);
      if (a.kind == ActionKind::kOffer || (a.kind == ActionKind::kReject && !is_legal(state, a))) {
        throw ProtocolError("policy returned an illegal response");
      }
      return a.kind == ActionKind::kAccept;
    }
    // The offer is gone from the continuation game, so it can never tie.
    if (fallback == o) throw ProtocolError("responder tie: offer equals its own continuation");
    return ctrl.objective.prefers(o, fallback);
  }

  Outcome after_offer(Mask available, Party mover, Outcome o) {
    if (responder_accepts(available, mover, o)) return o;
    return value(available & ~bit(o), other(mover));
  }

  std::optional<SolveEntry> entry(const SolveKey& key) const {
    const std::size_t slot = slot_of(key.available, key.mover);
    if (values_[slot] == kUnsolved) return std::nullopt;
    return SolveEntry{Outcome{values_[slot]}, optimal_[slot]};
  }

  // Visits every solved key (subgames with at least two outcomes).
  template <typename Fn>
  void for_each_entry(Fn&& fn) const {
    for (std::size_t slot = 0; slot < values_.size(); ++slot) {
      if (values_[slot] == kUnsolved) continue;
      const SolveKey key{static_cast<Mask>(slot >> 1), static_cast<Party>(slot & 1)};
      fn(key, SolveEntry{Outcome{values_[slot]}, optimal_[slot]});
    }
  }

  const PartyControl& control(Party p) const { return controls_[index_of(p)]; }

  static Mask bit(Outcome o) { return Mask{1} << o.id; }

 private:
  static constexpr std::uint8_t kUnsolved = 0xFF;

  static std::size_t slot_of(Mask available, Party mover) {
    return (static_cast<std::size_t>(available) << 1) | index_of(mover);
  }

  void solve(Mask available, Party mover, std::size_t slot) {
    const PartyControl& ctrl = controls_[index_of(mover)];
    Outcome best{};
    Mask optimal = 0;
    if (ctrl.policy != nullptr) {
      const NegotiationState state =
          NegotiationState::from_available(instance_, to_outcome_set(available, instance_.size()));
      const Action a = ctrl.policy->act(state, instance_);
      if (!is_legal(state, a)) throw ProtocolError("policy returned an illegal offer");
      best = after_offer(available, mover, a.outcome);
      optimal = bit(a.outcome);
    } else {
      bool first = true;
      for (Mask rest = available; rest != 0; rest &= rest - 1) {
        const Outcome o{static_cast<std::uint32_t>(std::countr_zero(rest))};
        const Outcome induced = after_offer(available, mover, o);
        if (first || ctrl.objective.prefers(induced, best)) {
          best = induced;
          optimal = bit(o);
          first = false;
        } else if (induced == best) {
          optimal |= bit(o);
        }
      }
    }
    values_[slot] = static_cast<std::uint8_t>(best.id);
    optimal_[slot] = optimal;
  }

  Instance instance_;
  std::array<PartyControl, 2> controls_;
  std::vector<std::uint8_t> values_;
  std::vector<Mask> optimal_;
};

inline std::array<PartyControl, 2> self_interested(const Instance& instance) {
  return {PartyControl::maximize(instance.order(Party::kP1)),
          PartyControl::maximize(instance.order(Party::kP2))};
}

struct SpeSolution {
  Outcome value;
  GameSolver table;
};

// Subgame perfect result by exhaustive backward induction.
inline SpeSolution solve_spe(const Instance& instance, std::size_t bound = kDefaultSolveBound) {
  GameSolver solver(instance, self_interested(instance), bound);
  const Outcome v = solver.root();
  return SpeSolution{v, std::move(solver)};
}

// Re-derives, for every subgame reached by the solver, the result induced by
// each possible offer from the children's values, and checks that the stored
// optimal offers are exactly the maximizers and all lead to one result.
inline bool verify_uniqueness(const Instance& instance, std::size_t bound = kDefaultSolveBound) {
  SpeSolution sol = solve_spe(instance, bound);
  GameSolver& solver = sol.table;
  std::vector<std::pair<SolveKey, SolveEntry>> entries;
  solver.for_each_entry([&](const SolveKey& k, const SolveEntry& e) { entries.emplace_back(k, e); });
  for (const auto& [key, entry] : entries) {
    const PreferenceOrder& mover_order = instance.order(key.mover);
    const Party responder = other(key.mover);
    std::optional<Outcome> best;
    Mask maximizers = 0;
    for (Mask rest = key.available; rest != 0; rest &= rest - 1) {
      const Outcome o{static_cast<std::uint32_t>(std::countr_zero(rest))};
      const Mask after = key.available & ~GameSolver::bit(o);
      const Outcome fallback = solver.value(after, responder);
      const Outcome induced = instance.order(responder).prefers(o, fallback) ? o : fallback;
      if (!best || mover_order.prefers(induced, *best)) {
        best = induced;
        maximizers = GameSolver::bit(o);
      } else if (induced == *best) {
        maximizers |= GameSolver::bit(o);
      }
    }
    if (!best || *best != entry.value || maximizers != entry.optimal_offers) return false;
  }
  return true;
}

// Worst case for `focal` when the other party is a pure minimizer of the
// focal party's rank, ignoring its own preferences. The focal party follows
// `focal_policy` when given, otherwise plays to maximize its own rank.
inline Outcome adversarial_value(const Instance& instance, Party focal,
                                 const StrategyPolicy* focal_policy = nullptr,
                                 std::size_t bound = kDefaultSolveBound) {
  std::array<PartyControl, 2> controls;
  controls[index_of(focal)] = focal_policy ? PartyControl::follow(*focal_policy)
                                           : PartyControl::maximize(instance.order(focal));
  controls[index_of(other(focal))] = PartyControl::maximize(instance.order(focal).reversed());
  GameSolver solver(instance, std::move(controls), bound);
  return solver.root();
}

// Oracle-backed opponent that plays to hurt `focal` as much as possible
// against the given focal policy (or against a focal party playing its
// own minimax when none is given).
class AdversaryPolicy final : public StrategyPolicy {
 public:
  AdversaryPolicy(const Instance& instance, Party focal, const StrategyPolicy* focal_policy = nullptr,
                  std::size_t bound = kDefaultSolveBound)
      : focal_(focal), solver_(instance, make_controls(instance, focal, focal_policy), bound) {
    solver_.root();
  }

  Action act(const NegotiationState& state, const Instance&) const override {
    if (state.acting_party() == focal_) throw DomainError("AdversaryPolicy queried for the focal party");
    const Mask available = to_mask(state.available());
    if (state.pending_offer()) {
      return solver_.responder_accepts(available, state.mover(), *state.pending_offer()) ? Action::accept()
                                                                                         : Action::reject();
    }
    solver_.value(available, state.mover());
    const SolveEntry e = *solver_.entry(SolveKey{available, state.mover()});
    return Action::offer(Outcome{static_cast<std::uint32_t>(std::countr_zero(e.optimal_offers))});
  }

 private:
  static std::array<PartyControl, 2> make_controls(const Instance& instance, Party focal,
                                                   const StrategyPolicy* focal_policy) {
    std::array<PartyControl, 2> controls;
    controls[index_of(focal)] = focal_policy ? PartyControl::follow(*focal_policy)
                                             : PartyControl::maximize(instance.order(focal));
    controls[index_of(other(focal))] = PartyControl::maximize(instance.order(focal).reversed());
    return controls;
  }

  Party focal_;
  mutable GameSolver solver_;
};

// Robust-optimization check for one party and one preference order: against
// an opponent playing maxmin with an unknown order, no deviation in the
// party's first action (followed by the best continuation even with the
// opponent's order known) has a better worst case than playing maxmin.
// The opposite order is the witness that pins the worst case to the bottom
// of U^k_1.
struct RobustCheck {
  bool passed = true;
  Outcome pair_worst{};
  Outcome bottom_of_upper{};
  std::string detail;
};

inline RobustCheck check_robust_equilibrium(const PreferenceOrder& own, Party focal, Party first_mover,
                                            MaxminMode mode = MaxminMode::kArbitrary) {
  const std::size_t m = own.size();
  const MaxminPolicy maxmin(mode);
  const std::vector<PreferenceOrder> opponents = all_orders(m);
  auto make = [&](const PreferenceOrder& opp) {
    return focal == Party::kP1 ? Instance(own, opp, first_mover) : Instance(opp, own, first_mover);
  };
  auto worse = [&](Outcome a, Outcome b) { return own.prefers(b, a) ? a : b; };

  RobustCheck check;
  {
    const Instance any = make(opponents.front());
    const OutcomeSet upper = upper_set(new_state(any), any, focal);
    check.bottom_of_upper = *upper.lowest();
    for (Outcome o : upper) check.bottom_of_upper = worse(check.bottom_of_upper, o);
  }

  std::optional<Outcome> pair_worst;
  const bool focal_first = focal == first_mover;
  const std::size_t deviations = focal_first ? m : 2;
  std::vector<std::optional<Outcome>> deviation_worst(deviations);
  for (const PreferenceOrder& opp : opponents) {
    const Instance instance = make(opp);
    const Outcome pair = run(instance, maxmin, maxmin).result;
    pair_worst = pair_worst ? worse(*pair_worst, pair) : pair;
    if (opp == own.reversed() && pair != check.bottom_of_upper) {
      check.passed = false;
      check.detail = "opposite order does not pin the result to the bottom of U";
    }

    std::array<PartyControl, 2> controls;
    controls[index_of(focal)] = PartyControl::maximize(own);
    controls[index_of(other(focal))] = PartyControl::follow(maxmin);
    GameSolver solver(instance, std::move(controls), m);
    const Mask full = solver.full_mask();
    for (std::size_t d = 0; d < deviations; ++d) {
      Outcome result{};
      if (focal_first) {
        result = solver.after_offer(full, first_mover, Outcome{static_cast<std::uint32_t>(d)});
      } else {
        const Action opening = maxmin.act(new_state(instance), instance);
        const Outcome o = opening.outcome;
        result = d == 0 ? o : (m == 1 ? o : solver.value(full & ~GameSolver::bit(o), focal));
      }
      deviation_worst[d] = deviation_worst[d] ? worse(*deviation_worst[d], result) : result;
    }
  }
  check.pair_worst = *pair_worst;
  if (check.pair_worst != check.bottom_of_upper) {
    check.passed = false;
    check.detail = "maxmin pair worst case differs from the bottom of U";
  }
  for (std::size_t d = 0; d < deviations; ++d) {
    if (own.prefers(*deviation_worst[d], check.pair_worst)) {
      check.passed = false;
      check.detail = "first-action deviation " + std::to_string(d) + " has a better worst case";
    }
  }
  return check;
}

}  // namespace vaov
