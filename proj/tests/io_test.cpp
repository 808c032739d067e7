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


#include <gtest/gtest.h>

#include "vaov/io.hpp"
#include "vaov/reference_instances.hpp"
#include "vaov/spe.hpp"

namespace vaov {
namespace {

using io::json;

json example() {
  return json::parse(R"({"outcomes": ["a", "b", "c"], "p1": ["a", "b", "c"], "p2": ["c", "b", "a"],
                         "first_mover": "p2"})");
}

std::string field_of(const json& j) {
  try {
    io::parse_instance(j);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

TEST(InstanceJson, ParsesLabelsAndOrders) {
  const io::LabeledInstance li = io::parse_instance(example());
  EXPECT_EQ(li.instance.size(), 3U);
  EXPECT_EQ(li.instance.first_mover(), Party::kP2);
  EXPECT_EQ(li.label(li.instance.order(Party::kP2).best()), "c");
  EXPECT_EQ(io::parse_instance(io::to_json(li)).instance, li.instance);
}

TEST(InstanceJson, FirstMoverDefaultsToP1) {
  json j = example();
  j.erase("first_mover");
  EXPECT_EQ(io::parse_instance(j).instance.first_mover(), Party::kP1);
}

TEST(InstanceJson, ErrorsNameTheField) {
  json dup = example();
  dup["outcomes"][1] = "a";
  EXPECT_EQ(field_of(dup), "outcomes");
  json unknown = example();
  unknown["p2"][0] = "z";
  EXPECT_EQ(field_of(unknown), "p2");
  json short_order = example();
  short_order["p1"].erase(0);
  EXPECT_EQ(field_of(short_order), "p1");
  json repeated = example();
  repeated["p1"][0] = "b";
  EXPECT_EQ(field_of(repeated), "p1");
  json mover = example();
  mover["first_mover"] = "p3";
  EXPECT_EQ(field_of(mover), "first_mover");
  json empty = example();
  empty["outcomes"] = json::array();
  EXPECT_EQ(field_of(empty), "outcomes");
  EXPECT_EQ(field_of(json::array()), "instance");
}

TEST(TranscriptJson, RoundTripsAndReplays) {
  const io::LabeledInstance li = io::with_default_labels(reference::disjoint_lower_sets());
  Transcript t = spe_transcript(li.instance);
  t.seed = 17;
  const json j = io::to_json(t, li);
  EXPECT_EQ(j["result"], "o3");
  EXPECT_EQ(j["events"][0]["outcome"], "o5");
  EXPECT_EQ(j["seed"], 17);
  const Transcript back = io::parse_transcript(j, li);
  EXPECT_EQ(back.events, t.events);
  EXPECT_EQ(back.result, t.result);
  EXPECT_EQ(back.seed, t.seed);
}

TEST(TranscriptJson, RejectsInconsistentFiles) {
  const io::LabeledInstance li = io::with_default_labels(reference::disjoint_lower_sets());
  const json good = io::to_json(spe_transcript(li.instance), li);
  json wrong_result = good;
  wrong_result["result"] = "o1";
  EXPECT_THROW(io::parse_transcript(wrong_result, li), ValidationError);
  json bad_action = good;
  bad_action["events"][1]["action"] = "counter";
  EXPECT_THROW(io::parse_transcript(bad_action, li), ValidationError);
  json out_of_turn = good;
  out_of_turn["events"][0]["actor"] = "p2";
  EXPECT_THROW(io::parse_transcript(out_of_turn, li), ProtocolError);
}

TEST(CorpusJson, RoundTripsExactly) {
  const io::Corpus c = io::generate_corpus(5, 10, 7);
  const json j = io::to_json(c);
  EXPECT_EQ(j["generator"], "mt19937_64");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["count"], 10);
  const io::Corpus back = io::parse_corpus(json::parse(j.dump()));
  ASSERT_EQ(back.instances.size(), 10U);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(back.instances[i].instance, c.instances[i].instance);
  EXPECT_EQ(io::to_json(back).dump(), j.dump());
  EXPECT_EQ(io::to_json(io::generate_corpus(5, 10, 7)).dump(), j.dump());
}

TEST(CorpusJson, SingleInstanceIsACorpusOfOne) {
  EXPECT_EQ(io::parse_corpus(example()).instances.size(), 1U);
}

}  // namespace
}  // namespace vaov
