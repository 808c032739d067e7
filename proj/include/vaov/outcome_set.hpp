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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include "vaov/types.hpp"

namespace vaov {

// Set of outcomes over a fixed universe [0, m), stored as a packed bitset.
// A single word covers m <= 64; larger universes use more words.
class OutcomeSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Outcome;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Outcome;

    Iterator() = default;
    Iterator(const OutcomeSet* set, std::size_t pos) : set_(set), pos_(pos) {
      advance_to_member();
    }

    Outcome operator*() const { return Outcome{static_cast<std::uint32_t>(pos_)}; }
    Iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    void advance_to_member() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        const std::size_t w = pos_ / 64;
        const std::uint64_t rest = set_->words_[w] >> (pos_ % 64);
        if (rest != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(rest));
          return;
        }
        pos_ = (w + 1) * 64;
      }
      pos_ = n;
    }

    const OutcomeSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  OutcomeSet() = default;
  explicit OutcomeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  OutcomeSet(std::size_t universe, std::initializer_list<std::uint32_t> ids)
      : OutcomeSet(universe) {
    for (auto id : ids) insert(Outcome{id});
  }

  static OutcomeSet full(std::size_t universe) {
    OutcomeSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    s.count_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Outcome o) const noexcept {
    return o.id < universe_ && ((words_[o.id / 64] >> (o.id % 64)) & 1U) != 0;
  }

  void insert(Outcome o) {
    std::uint64_t& w = words_.at(o.id / 64);
    const std::uint64_t bit = std::uint64_t{1} << (o.id % 64);
    if ((w & bit) == 0) {
      w |= bit;
      ++count_;
    }
  }

  void erase(Outcome o) {
    if (!contains(o)) return;
    words_[o.id / 64] &= ~(std::uint64_t{1} << (o.id % 64));
    --count_;
  }

  std::optional<Outcome> lowest() const {
    auto it = begin();
    if (it == end()) return std::nullopt;
    return *it;
  }

  OutcomeSet operator&(const OutcomeSet& rhs) const { return combine(rhs, [](auto a, auto b) { return a & b; }); }
  OutcomeSet operator|(const OutcomeSet& rhs) const { return combine(rhs, [](auto a, auto b) { return a | b; }); }
  OutcomeSet operator-(const OutcomeSet& rhs) const { return combine(rhs, [](auto a, auto b) { return a & ~b; }); }

  bool is_subset_of(const OutcomeSet& rhs) const { return (*this - rhs).empty(); }

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, universe_); }

  std::vector<Outcome> to_vector() const { return {begin(), end()}; }

  // Packed low word; meaningful as a full set encoding only when m <= 64.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const OutcomeSet& a, const OutcomeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  template <typename Op>
  OutcomeSet combine(const OutcomeSet& rhs, Op op) const {
    OutcomeSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t r = w < rhs.words_.size() ? rhs.words_[w] : 0;
      out.words_[w] = op(words_[w], r);
      out.count_ += static_cast<std::size_t>(std::popcount(out.words_[w]));
    }
    return out;
  }

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace vaov
