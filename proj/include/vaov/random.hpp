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
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "vaov/instance.hpp"
#include "vaov/preference.hpp"

namespace vaov {

// All randomness in the library goes through this generator: a 64-bit
// Mersenne Twister (std::mt19937_64, whose output sequence is fixed by the
// standard) with bounded draws and shuffles implemented here, so identical
// seeds give identical results on every standard library.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % bound;
  }

  // Fisher-Yates, last position first.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline PreferenceOrder random_order(std::size_t m, Rng& rng) {
  std::vector<std::uint32_t> ids(m);
  std::iota(ids.begin(), ids.end(), 0U);
  rng.shuffle(ids);
  return PreferenceOrder::from_ids(ids);
}

inline Instance random_instance(std::size_t m, Rng& rng, Party first_mover = Party::kP1) {
  PreferenceOrder p1 = random_order(m, rng);
  PreferenceOrder p2 = random_order(m, rng);
  return Instance(std::move(p1), std::move(p2), first_mover);
}

// Every strict order over m outcomes, in lexicographic order of rankings.
inline std::vector<PreferenceOrder> all_orders(std::size_t m) {
  std::vector<std::uint32_t> ids(m);
  std::iota(ids.begin(), ids.end(), 0U);
  std::vector<PreferenceOrder> out;
  do {
    out.push_back(PreferenceOrder::from_ids(ids));
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

// Calls fn(instance) for each of the (m!)^2 order pairs.
template <typename Fn>
void for_each_instance(std::size_t m, Party first_mover, Fn&& fn) {
  const std::vector<PreferenceOrder> orders = all_orders(m);
  for (const auto& a : orders) {
    for (const auto& b : orders) fn(Instance(a, b, first_mover));
  }
}

}  // namespace vaov
