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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace vaov {

enum class Party : std::uint8_t { kP1 = 0, kP2 = 1 };

constexpr Party other(Party p) noexcept {
  return p == Party::kP1 ? Party::kP2 : Party::kP1;
}

constexpr std::size_t index_of(Party p) noexcept {
  return static_cast<std::size_t>(p);
}

constexpr std::string_view to_string(Party p) noexcept {
  return p == Party::kP1 ? "p1" : "p2";
}

// Dense outcome id in [0, m). Labels live in the file layer only.
struct Outcome {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(const Outcome&, const Outcome&) = default;
};

}  // namespace vaov
