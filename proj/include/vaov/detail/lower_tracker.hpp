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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "vaov/detail/index_tree.hpp"
#include "vaov/instance.hpp"
#include "vaov/outcome_set.hpp"
#include "vaov/types.hpp"

namespace vaov {

// Size of a party's lower set when |O_t| = n: the responder may veto
// floor(n/2) offers, the mover one fewer when n is even.
constexpr std::size_t lower_set_size(std::size_t n, bool is_mover) noexcept {
  if (!is_mover || n % 2 == 1) return n / 2;
  return n == 0 ? 0 : n / 2 - 1;
}

namespace detail {

// Incrementally maintained lower sets of both parties along one line of
// play in which every offer is rejected. A party's lower set is the set of
// available outcomes it ranks at or below its boundary rank, so the tracker
// needs only one flag byte per outcome, a boundary and a "worst available"
// cursor per party, and one IndexTree per party holding the ranks of I's
// members (so the responder's lowest-ranked member of I is found without a
// scan).
//
// Along an offer-rule walk both cursors only move toward better ranks:
// an offer from I leaves the new responder one short and its boundary grows
// by one, and an offer of the responder's worst outcome keeps both lower sets
// the right size. Each cursor therefore crosses every rank at most once;
// setup is O(m) and each round costs O(1) amortized plus O(log64 m) tree
// work. Shrinking is still supported for arbitrary rejection sequences.
class LowerSetTracker {
 public:
  LowerSetTracker(const Instance& instance, const OutcomeSet& available, Party mover)
      : m_(instance.size()), n_(available.size()), mover_(mover), flags_(m_, 0) {
    for (Outcome o : available) flags_[o.id] = kAvailable;
    for (std::size_t k = 0; k < 2; ++k) {
      Side& side = sides_[k];
      const PreferenceOrder& order = instance.order(static_cast<Party>(k));
      side.ranking = order.ranking().data();
      side.ranks = order.ranks().data();
      side.boundary = static_cast<std::uint32_t>(m_);
      side.worst = static_cast<std::uint32_t>(m_);
      side.intersection = IndexTree(m_);
      const bool is_mover = static_cast<Party>(k) == mover_;
      grow_flags_only(side, lower_bit(k), lower_set_size(n_, is_mover));
    }
    for (Side& side : sides_) {
      for (std::uint32_t r = side.boundary; r < m_; ++r) {
        if ((flags_[side.ranking[r].id] & kAll) == kAll) side.intersection.set_leaf(r);
      }
      side.intersection.rebuild();
    }
  }

  std::size_t available_count() const noexcept { return n_; }
  Party mover() const noexcept { return mover_; }

  bool intersection_empty() const { return sides_[0].intersection.empty(); }

  std::size_t lower_count(Party p) const { return sides_[index_of(p)].count; }

  // The offering rule: the member of I_t the responder likes least, else the
  // responder's least-preferred available outcome.
  Outcome pick() {
    Side& side = sides_[index_of(other(mover_))];
    if (auto max = side.intersection.max()) return side.ranking[*max];
    return worst_available(side);
  }

  // Any available outcome (the last one once n == 1).
  Outcome any_available() { return worst_available(sides_[0]); }

  // `o` was offered and rejected: drop it, swap roles, rebalance.
  void reject(Outcome o) {
    const std::uint8_t f = flags_[o.id];
    if ((f & kBoth) == kBoth) {
      sides_[0].intersection.erase(sides_[0].ranks[o.id]);
      sides_[1].intersection.erase(sides_[1].ranks[o.id]);
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (f & lower_bit(k)) --sides_[k].count;
    }
    flags_[o.id] = 0;
    --n_;
    mover_ = other(mover_);
    resize_both();
  }

 private:
  static constexpr std::uint8_t kAvailable = 1;
  static constexpr std::uint8_t kBoth = 6;
  static constexpr std::uint8_t kAll = kAvailable | kBoth;
  static constexpr std::uint8_t lower_bit(std::size_t k) { return static_cast<std::uint8_t>(2U << k); }

  struct Side {
    const Outcome* ranking = nullptr;
    const std::uint32_t* ranks = nullptr;
    std::uint32_t boundary = 0;  // lower set = available outcomes ranked >= boundary
    std::uint32_t worst = 0;     // cursor toward the worst available outcome
    std::size_t count = 0;
    IndexTree intersection;
  };

  // Removed outcomes never come back, so the cursor only moves up. Callers
  // guarantee n >= 1. `worst` is one past the candidate rank.
  Outcome worst_available(Side& side) {
    while ((flags_[side.ranking[side.worst - 1].id] & kAvailable) == 0) --side.worst;
    return side.ranking[side.worst - 1];
  }

  // Initial fill: marks the lower set without touching the trees.
  void grow_flags_only(Side& side, std::uint8_t bit, std::size_t target) {
    while (side.count < target) {
      std::uint8_t* f;
      do {
        f = &flags_[side.ranking[--side.boundary].id];
      } while ((*f & kAvailable) == 0);
      *f |= bit;
      ++side.count;
    }
  }

  // `rank` is o's rank for party k; only the other party's rank is looked up.
  void set_lower(std::size_t k, Outcome o, std::uint32_t rank, bool member) {
    std::uint8_t& f = flags_[o.id];
    if (member) {
      f |= lower_bit(k);
    } else {
      f &= static_cast<std::uint8_t>(~lower_bit(k));
    }
    if ((f | lower_bit(k)) != kAll) return;
    Side& other_side = sides_[1 - k];
    if (member) {
      sides_[k].intersection.insert(rank);
      other_side.intersection.insert(other_side.ranks[o.id]);
    } else {
      sides_[k].intersection.erase(rank);
      other_side.intersection.erase(other_side.ranks[o.id]);
    }
  }

  void resize(std::size_t k, std::size_t target) {
    Side& side = sides_[k];
    while (side.count < target) {
      Outcome o;
      do {
        o = side.ranking[--side.boundary];
      } while ((flags_[o.id] & kAvailable) == 0);
      set_lower(k, o, side.boundary, true);
      ++side.count;
    }
    while (side.count > target) {
      const std::uint32_t rank = side.boundary++;
      const Outcome o = side.ranking[rank];
      if ((flags_[o.id] & lower_bit(k)) == 0) continue;
      set_lower(k, o, rank, false);
      --side.count;
    }
  }

  void resize_both() {
    resize(index_of(mover_), lower_set_size(n_, true));
    resize(index_of(other(mover_)), lower_set_size(n_, false));
  }

  std::size_t m_;
  std::size_t n_;
  Party mover_;
  std::vector<std::uint8_t> flags_;  // bit 0 available, bits 1-2 in p1/p2 lower set
  std::array<Side, 2> sides_;
};

}  // namespace detail
}  // namespace vaov
