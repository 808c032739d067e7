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
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace vaov::detail {

// Hierarchical 64-ary bitset over [0, n). Insert, erase and max cost one
// word operation per level, i.e. ceil(log64 n) (three levels for n <= 2^18).
// All levels live in one buffer, leaves first.
class IndexTree {
 public:
  IndexTree() = default;
  explicit IndexTree(std::size_t n) {
    std::size_t words = std::max<std::size_t>((n + 63) / 64, 1);
    std::size_t total = 0;
    for (;;) {
      offset_[depth_++] = total;
      total += words;
      if (words == 1) break;
      words = (words + 63) / 64;
    }
    words_.assign(total, 0);
  }

  bool empty() const noexcept { return depth_ == 0 || words_.back() == 0; }

  bool contains(std::size_t i) const noexcept { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }

  void insert(std::size_t i) {
    for (std::size_t l = 0; l < depth_; ++l, i /= 64) {
      std::uint64_t& w = words_[offset_[l] + i / 64];
      const std::uint64_t before = w;
      w |= std::uint64_t{1} << (i % 64);
      if (before != 0) return;
    }
  }

  void erase(std::size_t i) {
    for (std::size_t l = 0; l < depth_; ++l, i /= 64) {
      std::uint64_t& w = words_[offset_[l] + i / 64];
      w &= ~(std::uint64_t{1} << (i % 64));
      if (w != 0) return;
    }
  }

  std::optional<std::size_t> max() const {
    if (empty()) return std::nullopt;
    std::size_t i = 0;
    for (std::size_t l = depth_; l-- > 0;) {
      const std::uint64_t w = words_[offset_[l] + i];
      i = i * 64 + (63 - static_cast<std::size_t>(std::countl_zero(w)));
    }
    return i;
  }

  // Bulk loading: set leaf bits with `set_leaf`, then call `rebuild` once.
  void set_leaf(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  void rebuild() noexcept {
    for (std::size_t l = 1; l < depth_; ++l) {
      const std::size_t below = offset_[l - 1];
      const std::size_t count = offset_[l] - below;
      std::fill(words_.begin() + static_cast<std::ptrdiff_t>(offset_[l]),
                words_.begin() + static_cast<std::ptrdiff_t>(l + 1 < depth_ ? offset_[l + 1] : words_.size()), 0);
      for (std::size_t j = 0; j < count; ++j) {
        if (words_[below + j] != 0) words_[offset_[l] + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

 private:
  static constexpr std::size_t kMaxDepth = 12;  // 64^11 > 2^64

  std::vector<std::uint64_t> words_;
  std::array<std::size_t, kMaxDepth> offset_{};
  std::size_t depth_ = 0;
};

}  // namespace vaov::detail
