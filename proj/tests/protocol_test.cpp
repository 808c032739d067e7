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

#include <variant>

#include "vaov/maxmin.hpp"
#include "vaov/protocol.hpp"
#include "vaov/random.hpp"
#include "vaov/spe.hpp"

namespace vaov {
namespace {

Instance small() { return Instance(PreferenceOrder::from_ids({0, 1, 2}), PreferenceOrder::from_ids({2, 1, 0})); }

NegotiationState step(NegotiationState s, Action a) { return std::get<NegotiationState>(apply(std::move(s), a)); }

TEST(Protocol, InitialState) {
  const Instance in = small().with_first_mover(Party::kP2);
  const NegotiationState s = new_state(in);
  EXPECT_EQ(s.round(), 1U);
  EXPECT_EQ(s.mover(), Party::kP2);
  EXPECT_EQ(s.acting_party(), Party::kP2);
  EXPECT_EQ(s.available().size(), 3U);
  EXPECT_FALSE(s.pending_offer());
  EXPECT_EQ(legal_actions(s).size(), 3U);
}

TEST(Protocol, RejectRemovesOfferAndSwapsRoles) {
  const Instance in = small();
  NegotiationState s = step(new_state(in), Action::offer(Outcome{1}));
  EXPECT_EQ(s.acting_party(), Party::kP2);
  EXPECT_EQ(legal_actions(s).size(), 2U);
  s = step(std::move(s), Action::reject());
  EXPECT_EQ(s.round(), 2U);
  EXPECT_EQ(s.mover(), Party::kP2);
  EXPECT_FALSE(s.available().contains(Outcome{1}));
  EXPECT_EQ(s.history().size(), 2U);
}

TEST(Protocol, NoOutcomeOfferedTwice) {
  const Instance in = small();
  NegotiationState s = step(step(new_state(in), Action::offer(Outcome{1})), Action::reject());
  EXPECT_FALSE(is_legal(s, Action::offer(Outcome{1})));
  EXPECT_THROW(apply(s, Action::offer(Outcome{1})), ProtocolError);
}

TEST(Protocol, OutOfTurnActionsThrow) {
  const Instance in = small();
  const NegotiationState s = new_state(in);
  EXPECT_THROW(apply(s, Action::accept()), ProtocolError);
  EXPECT_THROW(apply(s, Action::reject()), ProtocolError);
  const NegotiationState pending = step(s, Action::offer(Outcome{0}));
  EXPECT_THROW(apply(pending, Action::offer(Outcome{2})), ProtocolError);
}

TEST(Protocol, LastOutcomeCannotBeRejected) {
  const Instance in = small();
  NegotiationState s = new_state(in);
  s = step(step(std::move(s), Action::offer(Outcome{0})), Action::reject());
  s = step(step(std::move(s), Action::offer(Outcome{1})), Action::reject());
  s = step(std::move(s), Action::offer(Outcome{2}));
  ASSERT_EQ(legal_actions(s).size(), 1U);
  EXPECT_EQ(legal_actions(s)[0], Action::accept());
  EXPECT_THROW(apply(s, Action::reject()), ProtocolError);
  EXPECT_EQ(forced_result(s), Outcome{2});
  const auto done = std::get<TerminalResult>(apply(s, Action::accept()));
  EXPECT_EQ(done.result, Outcome{2});
}

TEST(Protocol, AcceptEndsWithOffer) {
  const Instance in = small();
  const auto done = std::get<TerminalResult>(apply(step(new_state(in), Action::offer(Outcome{1})), Action::accept()));
  EXPECT_EQ(done.result, Outcome{1});
  EXPECT_EQ(done.history.size(), 2U);
  EXPECT_EQ(done.history[1].actor, Party::kP2);
}

TEST(Protocol, FromAvailableDerivesRoundAndMover) {
  const Instance in = small().with_first_mover(Party::kP2);
  const auto s = NegotiationState::from_available(in, OutcomeSet(3, {0, 2}), Outcome{2});
  EXPECT_EQ(s.round(), 2U);
  EXPECT_EQ(s.mover(), Party::kP1);
  EXPECT_EQ(s.acting_party(), Party::kP2);
  EXPECT_THROW(NegotiationState::from_available(in, OutcomeSet(3), std::nullopt), ValidationError);
  EXPECT_THROW(NegotiationState::from_available(in, OutcomeSet(3, {0}), Outcome{1}), ValidationError);
}

// Transcripts from real runs stay within 2m - 1 events, record the forced
// final offer without an acceptance, and replay to the same result.
TEST(Protocol, RunAndReplayAgree) {
  Rng rng(3);
  const SpePolicy spe;
  const MaxminPolicy maxmin;
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = 1 + rng.below(9);
    const Instance in = random_instance(m, rng, rng.below(2) == 0 ? Party::kP1 : Party::kP2);
    for (const StrategyPolicy* a : {static_cast<const StrategyPolicy*>(&spe), static_cast<const StrategyPolicy*>(&maxmin)}) {
      const Transcript t = run(in, *a, spe);
      EXPECT_LE(t.events.size(), 2 * m - 1);
      EXPECT_EQ(replay(in, t.events), t.result);
      EXPECT_EQ(t.events.back().action.kind == ActionKind::kOffer, t.events.size() == 2 * m - 1);
      EXPECT_EQ(t.offers().size(), (t.events.size() + 1) / 2);
    }
  }
}

TEST(Protocol, ReplayRejectsBadTranscripts) {
  const Instance in = small();
  const Transcript t = spe_transcript(in);
  auto shifted = t.events;
  shifted[0].actor = Party::kP2;
  EXPECT_THROW(replay(in, shifted), ProtocolError);
  auto wrong_round = t.events;
  wrong_round[0].round = 2;
  EXPECT_THROW(replay(in, wrong_round), ProtocolError);
  EXPECT_THROW(replay(in, {}), ProtocolError);
  std::vector<Event> twice = {{1, Party::kP1, Action::offer(Outcome{0})},
                              {1, Party::kP2, Action::reject()},
                              {2, Party::kP2, Action::offer(Outcome{0})}};
  EXPECT_THROW(replay(in, twice), ProtocolError);
}

class IllegalPolicy final : public StrategyPolicy {
 public:
  Action act(const NegotiationState&, const Instance&) const override { return Action::reject(); }
};

TEST(Protocol, RunRejectsIllegalPolicyActions) {
  const IllegalPolicy bad;
  EXPECT_THROW(run(small(), bad, bad), ProtocolError);
}

TEST(Protocol, SingleOutcomeIsForced) {
  const Instance in(PreferenceOrder::identity(1), PreferenceOrder::identity(1));
  const Transcript t = spe_transcript(in);
  ASSERT_EQ(t.events.size(), 1U);
  EXPECT_EQ(t.result, Outcome{0});
  EXPECT_EQ(replay(in, t.events), Outcome{0});
}

}  // namespace
}  // namespace vaov
