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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vaov/instance.hpp"
#include "vaov/maxmin.hpp"
#include "vaov/oracle.hpp"
#include "vaov/random.hpp"
#include "vaov/rc.hpp"
#include "vaov/reference_instances.hpp"
#include "vaov/spe.hpp"

namespace vaov {

// Per-instance checks run by the batch verifier, in report order.
inline const std::vector<std::string>& batch_check_names() {
  static const std::vector<std::string> names = {
      "spe-vs-oracle",     "rc-membership",     "rc-relations", "monotonicity",
      "maxmin-guarantee",  "maxmin-optimality", "uniqueness",   "path-invariants",
      "both-maxmin",
  };
  return names;
}

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct InstanceVerdict {
  std::vector<std::string> failed;  // names of failed checks
  bool ok() const { return failed.empty(); }
};

// Runs every check on one instance. `seed` drives the monotone extension.
inline InstanceVerdict verify_instance(const Instance& instance, std::uint64_t seed) {
  InstanceVerdict v;
  auto record = [&](const char* name, bool ok) {
    if (!ok) v.failed.emplace_back(name);
  };
  const Outcome spe = spe_result(instance);
  const SpeSolution oracle = solve_spe(instance);
  record("spe-vs-oracle", spe == oracle.value);

  const RelationReport relations = verify_rc_relations(instance);
  record("rc-membership", relations.clauses.front().passed);
  record("rc-relations", relations.all_passed());

  Rng rng(seed);
  const std::size_t extra = 1 + static_cast<std::size_t>(rng.below(3));
  const Instance extended = monotone_extension(instance, extra, rng.next());
  const Outcome extended_spe = spe_result(extended);
  record("monotonicity", extended.order(Party::kP1).prefers(extended_spe, spe) &&
                             extended.order(Party::kP2).prefers(extended_spe, spe));

  const NegotiationState root = new_state(instance);
  bool guarantee = true;
  bool optimality = true;
  for (Party focal : {Party::kP1, Party::kP2}) {
    const OutcomeSet upper = upper_set(root, instance, focal);
    for (MaxminMode mode : {MaxminMode::kArbitrary, MaxminMode::kHeuristic}) {
      const MaxminPolicy policy(mode);
      guarantee = guarantee && upper.contains(adversarial_value(instance, focal, &policy));
    }
    Outcome floor = *upper.lowest();
    for (Outcome o : upper) {
      if (instance.order(focal).prefers(floor, o)) floor = o;
    }
    const Outcome minimax = adversarial_value(instance, focal);
    optimality = optimality && minimax == floor &&
                 instance.order(focal).weakly_prefers(spe, minimax);
  }
  record("maxmin-guarantee", guarantee);
  record("maxmin-optimality", optimality);

  record("uniqueness", verify_uniqueness(instance));
  record("path-invariants", audit_spe_trace(instance).empty());

  const MaxminPolicy maxmin;
  const Outcome both = run(instance, maxmin, maxmin).result;
  const RoundSets sets = round_sets(root, instance);
  record("both-maxmin", sets.jg.contains(both) && (!sets.intersection.empty() || both == spe));
  return v;
}

// Regression for the non-existence of an ex-post equilibrium: p1's truthful
// play yields a result it ranks below the result of acting on another order.
inline bool misreport_regression_holds() {
  const auto [truthful, alternative] = reference::misreport_pair();
  const Outcome honest = spe_result(truthful);
  const Outcome misreported = spe_result(alternative);
  return honest == Outcome{3} && misreported == Outcome{2} &&
         truthful.order(Party::kP1).prefers(misreported, honest);
}

}  // namespace vaov
