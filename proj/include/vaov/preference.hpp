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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "vaov/errors.hpp"
#include "vaov/types.hpp"

namespace vaov {

// Strict total order over outcomes, stored best first. rank 0 is the top.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;

  // Throws ValidationError unless `ranking` is a permutation of 0..m-1.
  explicit PreferenceOrder(std::vector<Outcome> ranking, const std::string& field = "ranking")
      : ranking_(std::move(ranking)), rank_of_(ranking_.size(), kUnranked) {
    for (std::size_t r = 0; r < ranking_.size(); ++r) {
      const std::uint32_t id = ranking_[r].id;
      if (id >= ranking_.size()) {
        throw ValidationError(field, "outcome id " + std::to_string(id) + " out of range");
      }
      if (rank_of_[id] != kUnranked) {
        throw ValidationError(field, "outcome id " + std::to_string(id) + " ranked twice");
      }
      rank_of_[id] = static_cast<std::uint32_t>(r);
    }
  }

  static PreferenceOrder from_ids(std::span<const std::uint32_t> best_first,
                                  const std::string& field = "ranking") {
    std::vector<Outcome> ranking;
    ranking.reserve(best_first.size());
    for (auto id : best_first) ranking.push_back(Outcome{id});
    return PreferenceOrder(std::move(ranking), field);
  }

  static PreferenceOrder from_ids(std::initializer_list<std::uint32_t> best_first) {
    return from_ids(std::span<const std::uint32_t>(best_first.begin(), best_first.size()));
  }

  static PreferenceOrder identity(std::size_t m) {
    std::vector<Outcome> ranking(m);
    for (std::size_t i = 0; i < m; ++i) ranking[i] = Outcome{static_cast<std::uint32_t>(i)};
    return PreferenceOrder(std::move(ranking));
  }

  std::size_t size() const noexcept { return ranking_.size(); }
  Outcome at(std::size_t rank) const { return ranking_.at(rank); }
  std::size_t rank_of(Outcome o) const { return rank_of_.at(o.id); }

  // a is strictly better than b.
  bool prefers(Outcome a, Outcome b) const { return rank_of(a) < rank_of(b); }
  bool weakly_prefers(Outcome a, Outcome b) const { return rank_of(a) <= rank_of(b); }

  Outcome best() const { return ranking_.front(); }
  Outcome worst() const { return ranking_.back(); }

  std::span<const Outcome> ranking() const noexcept { return ranking_; }
  // rank_of for every outcome id.
  std::span<const std::uint32_t> ranks() const noexcept { return rank_of_; }

  PreferenceOrder reversed() const {
    std::vector<Outcome> r(ranking_.rbegin(), ranking_.rend());
    return PreferenceOrder(std::move(r));
  }

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  static constexpr std::uint32_t kUnranked = ~std::uint32_t{0};

  std::vector<Outcome> ranking_;
  std::vector<std::uint32_t> rank_of_;
};

}  // namespace vaov
