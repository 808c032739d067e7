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

#include <utility>

#include "vaov/instance.hpp"
#include "vaov/preference.hpp"

// Small hand-checked instances used by tests, the verifier and the samples.
// Outcome ids are 0-based: id k is labelled "o{k+1}" in files.
namespace vaov::reference {

// p1: o6 > o5 > o4 > o3 > o2 > o1, p2: o1 > o3 > o2 > o6 > o4 > o5.
// I_1 is empty; the equilibrium path offers o5, o1, o4, o2, o6 and ends on o3.
inline Instance disjoint_lower_sets() {
  return Instance(PreferenceOrder::from_ids({5, 4, 3, 2, 1, 0}),
                  PreferenceOrder::from_ids({0, 2, 1, 5, 3, 4}));
}

// Same p1, p2: o1 > o3 > o6 > o2 > o4 > o5. I_1 = {o2}; ends on o6.
inline Instance overlapping_lower_sets() {
  return Instance(PreferenceOrder::from_ids({5, 4, 3, 2, 1, 0}),
                  PreferenceOrder::from_ids({0, 2, 5, 1, 3, 4}));
}

// Two instances sharing p2's order in which p1 gains by acting as if it held
// the second order: truthful play ends on o4, the alternative on o3, and the
// truthful p1 ranks o3 above o4.
//   truthful p1:  o6 > o3 > o4 > o5 > o2 > o1
//   alternative:  o6 > o3 > o2 > o1 > o5 > o4
//   p2:           o4 > o5 > o3 > o6 > o2 > o1
inline std::pair<Instance, Instance> misreport_pair() {
  const auto p2 = PreferenceOrder::from_ids({3, 4, 2, 5, 1, 0});
  return {Instance(PreferenceOrder::from_ids({5, 2, 3, 4, 1, 0}), p2),
          Instance(PreferenceOrder::from_ids({5, 2, 1, 0, 4, 3}), p2)};
}

}  // namespace vaov::reference
