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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "vaov/errors.hpp"
#include "vaov/instance.hpp"
#include "vaov/preference.hpp"
#include "vaov/protocol.hpp"
#include "vaov/random.hpp"

namespace vaov::io {

using nlohmann::json;

// An instance together with the outcome labels used in files. Label i names
// outcome id i.
struct LabeledInstance {
  Instance instance;
  std::vector<std::string> labels;

  const std::string& label(Outcome o) const { return labels.at(o.id); }
};

inline std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back("o" + std::to_string(i + 1));
  return labels;
}

inline LabeledInstance with_default_labels(Instance instance) {
  auto labels = default_labels(instance.size());
  return LabeledInstance{std::move(instance), std::move(labels)};
}

inline Party parse_party(const json& j, const std::string& field) {
  if (!j.is_string()) throw ValidationError(field, "expected \"p1\" or \"p2\"");
  const auto s = j.get<std::string>();
  if (s == "p1") return Party::kP1;
  if (s == "p2") return Party::kP2;
  throw ValidationError(field, "expected \"p1\" or \"p2\", got \"" + s + "\"");
}

// {"outcomes": [...], "p1": [...], "p2": [...], "first_mover": "p1"|"p2"}
// Orders list labels best first. "first_mover" defaults to "p1".
inline LabeledInstance parse_instance(const json& j) {
  if (!j.is_object()) throw ValidationError("instance", "expected a JSON object");
  if (!j.contains("outcomes") || !j["outcomes"].is_array()) {
    throw ValidationError("outcomes", "missing or not an array");
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> ids;
  for (const auto& l : j["outcomes"]) {
    if (!l.is_string()) throw ValidationError("outcomes", "labels must be strings");
    auto s = l.get<std::string>();
    if (!ids.emplace(s, static_cast<std::uint32_t>(labels.size())).second) {
      throw ValidationError("outcomes", "duplicate label \"" + s + "\"");
    }
    labels.push_back(std::move(s));
  }
  if (labels.empty()) throw ValidationError("outcomes", "instance needs at least one outcome");

  auto parse_order = [&](const char* field) {
    if (!j.contains(field) || !j[field].is_array()) {
      throw ValidationError(field, "missing or not an array");
    }
    std::vector<Outcome> ranking;
    for (const auto& l : j[field]) {
      if (!l.is_string()) throw ValidationError(field, "labels must be strings");
      auto it = ids.find(l.get<std::string>());
      if (it == ids.end()) throw ValidationError(field, "unknown label \"" + l.get<std::string>() + "\"");
      ranking.push_back(Outcome{it->second});
    }
    if (ranking.size() != labels.size()) {
      throw ValidationError(field, "must rank every outcome exactly once");
    }
    return PreferenceOrder(std::move(ranking), field);
  };
  PreferenceOrder p1 = parse_order("p1");
  PreferenceOrder p2 = parse_order("p2");
  Party first = Party::kP1;
  if (j.contains("first_mover")) first = parse_party(j["first_mover"], "first_mover");
  return LabeledInstance{Instance(std::move(p1), std::move(p2), first), std::move(labels)};
}

inline json to_json(const LabeledInstance& li) {
  json j;
  j["outcomes"] = li.labels;
  for (Party p : {Party::kP1, Party::kP2}) {
    json order = json::array();
    for (Outcome o : li.instance.order(p).ranking()) order.push_back(li.label(o));
    j[std::string(to_string(p))] = std::move(order);
  }
  j["first_mover"] = std::string(to_string(li.instance.first_mover()));
  return j;
}

inline json to_json(const Transcript& t, const LabeledInstance& li) {
  json events = json::array();
  for (const Event& e : t.events) {
    json ev;
    ev["round"] = e.round;
    ev["actor"] = std::string(to_string(e.actor));
    ev["action"] = to_string(e.action.kind);
    if (e.action.kind == ActionKind::kOffer) ev["outcome"] = li.label(e.action.outcome);
    events.push_back(std::move(ev));
  }
  json j;
  j["events"] = std::move(events);
  j["result"] = li.label(t.result);
  if (t.seed) j["seed"] = *t.seed;
  return j;
}

// Parses a transcript file and replays it; the recorded result must match.
inline Transcript parse_transcript(const json& j, const LabeledInstance& li) {
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array()) {
    throw ValidationError("events", "missing or not an array");
  }
  std::unordered_map<std::string, std::uint32_t> ids;
  for (std::size_t i = 0; i < li.labels.size(); ++i) ids.emplace(li.labels[i], static_cast<std::uint32_t>(i));
  auto outcome_of = [&](const json& v, const std::string& field) {
    if (!v.is_string() || !ids.contains(v.get<std::string>())) {
      throw ValidationError(field, "unknown outcome label");
    }
    return Outcome{ids.at(v.get<std::string>())};
  };
  Transcript t;
  for (const auto& ev : j["events"]) {
    Event e;
    if (!ev.contains("round") || !ev["round"].is_number_unsigned()) {
      throw ValidationError("events.round", "expected a positive integer");
    }
    e.round = ev["round"].get<std::size_t>();
    e.actor = parse_party(ev.value("actor", json()), "events.actor");
    const std::string action = ev.value("action", "");
    if (action == "offer") {
      e.action = Action::offer(outcome_of(ev.value("outcome", json()), "events.outcome"));
    } else if (action == "accept") {
      e.action = Action::accept();
    } else if (action == "reject") {
      e.action = Action::reject();
    } else {
      throw ValidationError("events.action", "expected offer, accept or reject");
    }
    t.events.push_back(e);
  }
  if (!j.contains("result")) throw ValidationError("result", "missing");
  t.result = outcome_of(j["result"], "result");
  if (j.contains("seed") && !j["seed"].is_null()) t.seed = j["seed"].get<std::uint64_t>();
  if (replay(li.instance, t.events) != t.result) {
    throw ValidationError("result", "does not match the replayed events");
  }
  return t;
}

// {"generator": "mt19937_64", "seed": s, "m": m, "count": n, "instances": [...]}
struct Corpus {
  std::optional<std::uint64_t> seed;
  std::vector<LabeledInstance> instances;
};

inline Corpus generate_corpus(std::size_t m, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  Corpus c;
  c.seed = seed;
  c.instances.reserve(count);
  for (std::size_t i = 0; i < count; ++i) c.instances.push_back(with_default_labels(random_instance(m, rng)));
  return c;
}

inline json to_json(const Corpus& c) {
  json j;
  j["generator"] = Rng::kName;
  if (c.seed) j["seed"] = *c.seed;
  j["m"] = c.instances.empty() ? 0 : c.instances.front().instance.size();
  j["count"] = c.instances.size();
  json list = json::array();
  for (const auto& li : c.instances) list.push_back(to_json(li));
  j["instances"] = std::move(list);
  return j;
}

// Accepts a corpus object or a single instance object.
inline Corpus parse_corpus(const json& j) {
  Corpus c;
  if (j.is_object() && j.contains("instances")) {
    if (!j["instances"].is_array()) throw ValidationError("instances", "expected an array");
    if (j.contains("seed") && j["seed"].is_number_unsigned()) c.seed = j["seed"].get<std::uint64_t>();
    for (const auto& inst : j["instances"]) c.instances.push_back(parse_instance(inst));
    return c;
  }
  c.instances.push_back(parse_instance(j));
  return c;
}

}  // namespace vaov::io
