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
#include <utility>

#include "vaov/errors.hpp"
#include "vaov/preference.hpp"
#include "vaov/types.hpp"

namespace vaov {

// Two strict orders over the same m outcomes plus the party that offers first.
class Instance {
 public:
  Instance(PreferenceOrder p1, PreferenceOrder p2, Party first_mover = Party::kP1)
      : orders_{std::move(p1), std::move(p2)}, first_mover_(first_mover) {
    if (orders_[0].size() == 0) throw ValidationError("p1", "instance needs at least one outcome");
    if (orders_[1].size() != orders_[0].size()) {
      throw ValidationError("p2", "orders rank different numbers of outcomes");
    }
  }

  std::size_t size() const noexcept { return orders_[0].size(); }
  const PreferenceOrder& order(Party p) const noexcept { return orders_[index_of(p)]; }
  Party first_mover() const noexcept { return first_mover_; }

  // Rounds are 1-based; the first mover offers in odd rounds.
  Party mover_at(std::size_t round) const noexcept {
    return round % 2 == 1 ? first_mover_ : other(first_mover_);
  }

  Instance with_first_mover(Party p) const { return Instance(orders_[0], orders_[1], p); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.orders_ == b.orders_ && a.first_mover_ == b.first_mover_;
  }

 private:
  std::array<PreferenceOrder, 2> orders_;
  Party first_mover_;
};

}  // namespace vaov
