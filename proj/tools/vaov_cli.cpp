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


// vaov: command-line front end.
//
//   vaov spe FILE                      equilibrium transcript
//   vaov rc FILE                       Rational Compromise set and depth
//   vaov play FILE --policy1 P --policy2 Q [--informed p1|p2]
//   vaov maxmin FILE [--against maxmin|adversary|informed] [--focal p1|p2]
//   vaov gen M COUNT --seed S [--out FILE]
//   vaov verify (FILE | --exhaustive M) [--seed S] [--out DIR]
//
// stdout carries JSON only; diagnostics go to stderr. Exit status: 0 ok,
// 1 a verification check failed, 2 bad arguments, input or I/O.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vaov/errors.hpp"
#include "vaov/io.hpp"
#include "vaov/maxmin.hpp"
#include "vaov/oracle.hpp"
#include "vaov/random.hpp"
#include "vaov/rc.hpp"
#include "vaov/reference_instances.hpp"
#include "vaov/spe.hpp"
#include "vaov/verify.hpp"

namespace {

using vaov::Instance;
using vaov::Outcome;
using vaov::Party;
using vaov::io::json;
using vaov::io::LabeledInstance;

constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw vaov::ValidationError(path, std::string("invalid JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<Party> parse_party_flag(const std::string& value, const char* flag) {
  if (value.empty()) return std::nullopt;
  return vaov::io::parse_party(json(value), flag);
}

LabeledInstance load_instance(const std::string& path, const std::string& first_mover) {
  LabeledInstance li = vaov::io::parse_instance(read_json(path));
  if (auto p = parse_party_flag(first_mover, "--first-mover")) {
    li.instance = li.instance.with_first_mover(*p);
  }
  return li;
}

json labels_of(const LabeledInstance& li, const std::vector<Outcome>& outcomes) {
  json out = json::array();
  for (Outcome o : outcomes) out.push_back(li.label(o));
  return out;
}

json relations_json(const LabeledInstance& li, const vaov::RelationReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"spe", li.label(r.spe)},
          {"spe_swapped", li.label(r.spe_swapped)},
          {"rc", labels_of(li, r.rc.outcomes)},
          {"v", r.rc.v_star},
          {"offers_until_empty", {{"p1", r.counts.p1}, {"p2", r.counts.p2}}},
          {"clauses", std::move(clauses)},
          {"passed", r.all_passed()}};
}

// play / maxmin

struct PolicySet {
  std::unique_ptr<vaov::StrategyPolicy> p1;
  std::unique_ptr<vaov::StrategyPolicy> p2;
};

std::unique_ptr<vaov::StrategyPolicy> make_simple_policy(const std::string& name, Party self,
                                                         std::optional<Party> informed) {
  if (name == "spe") return std::make_unique<vaov::SpePolicy>();
  if (name == "maxmin") return std::make_unique<vaov::MaxminPolicy>(vaov::MaxminMode::kArbitrary);
  if (name == "maxmin-heuristic") return std::make_unique<vaov::MaxminPolicy>(vaov::MaxminMode::kHeuristic);
  if (name == "informed") {
    if (!informed) throw vaov::ValidationError("--informed", "required with the informed policy");
    if (*informed != self) {
      throw vaov::ValidationError("--informed", "names " + std::string(vaov::to_string(*informed)) +
                                                    " but the informed policy is assigned to " +
                                                    std::string(vaov::to_string(self)));
    }
    return std::make_unique<vaov::InformedPolicy>(self);
  }
  throw vaov::ValidationError(self == Party::kP1 ? "--policy1" : "--policy2", "unknown policy \"" + name + "\"");
}

PolicySet make_policies(const Instance& instance, const std::string& name1, const std::string& name2,
                        std::optional<Party> informed) {
  if (name1 == "adversary" && name2 == "adversary") {
    throw vaov::ValidationError("--policy2", "at most one party can be the adversary");
  }
  PolicySet set;
  if (name1 != "adversary") set.p1 = make_simple_policy(name1, Party::kP1, informed);
  if (name2 != "adversary") set.p2 = make_simple_policy(name2, Party::kP2, informed);
  if (!set.p1) set.p1 = std::make_unique<vaov::AdversaryPolicy>(instance, Party::kP2, set.p2.get());
  if (!set.p2) set.p2 = std::make_unique<vaov::AdversaryPolicy>(instance, Party::kP1, set.p1.get());
  return set;
}

json play_json(const LabeledInstance& li, const std::string& name1, const std::string& name2,
               std::optional<Party> informed) {
  const PolicySet policies = make_policies(li.instance, name1, name2, informed);
  const vaov::Transcript t = vaov::run(li.instance, *policies.p1, *policies.p2);
  json j = vaov::io::to_json(t, li);
  j["policies"] = {{"p1", name1}, {"p2", name2}};
  return j;
}

// verify

struct VerifyInput {
  std::vector<LabeledInstance> instances;
  std::vector<json> raw;  // the instance exactly as read, for failure dumps
  bool exhaustive = false;
};

json run_verify(const VerifyInput& input, std::uint64_t seed, const std::string& out_dir, bool& all_ok) {
  const auto& names = vaov::batch_check_names();
  std::vector<vaov::CheckTally> tallies;
  for (const auto& n : names) tallies.push_back({n, 0, 0});

  json failures = json::array();
  json reports = json::array();
  vaov::Rng seeds(seed);
  bool dir_ready = false;
  for (std::size_t i = 0; i < input.instances.size(); ++i) {
    const LabeledInstance& li = input.instances[i];
    const vaov::InstanceVerdict verdict = vaov::verify_instance(li.instance, seeds.next());
    for (auto& tally : tallies) {
      bool failed = false;
      for (const auto& f : verdict.failed) failed = failed || f == tally.name;
      (failed ? tally.failed : tally.passed) += 1;
    }
    if (!input.exhaustive) reports.push_back(relations_json(li, vaov::verify_rc_relations(li.instance)));
    if (verdict.ok()) continue;
    if (!dir_ready) {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
      dir_ready = true;
    }
    const std::string path = (std::filesystem::path(out_dir) / ("failing-" + std::to_string(i) + ".json")).string();
    write_file(path, input.raw[i].dump(2) + "\n");
    failures.push_back({{"index", i}, {"failed", verdict.failed}, {"dump", path}});
  }

  const auto [truthful, alternative] = vaov::reference::misreport_pair();
  bool pair_in_corpus[2] = {false, false};
  for (const auto& li : input.instances) {
    pair_in_corpus[0] = pair_in_corpus[0] || li.instance == truthful;
    pair_in_corpus[1] = pair_in_corpus[1] || li.instance == alternative;
  }
  const bool misreport = vaov::misreport_regression_holds();

  json checks = json::object();
  all_ok = misreport;
  for (const auto& t : tallies) {
    checks[t.name] = {{"passed", t.passed}, {"failed", t.failed}};
    all_ok = all_ok && t.failed == 0;
  }
  json report = {{"instances", input.instances.size()},
                 {"seed", seed},
                 {"checks", std::move(checks)},
                 {"misreport_regression",
                  {{"passed", misreport}, {"pair_in_corpus", pair_in_corpus[0] && pair_in_corpus[1]}}},
                 {"failures", std::move(failures)},
                 {"ok", all_ok}};
  if (!input.exhaustive) report["reports"] = std::move(reports);
  return report;
}

VerifyInput exhaustive_input(std::size_t m) {
  if (m < 1 || m > 5) throw vaov::ValidationError("--exhaustive", "m must be between 1 and 5");
  VerifyInput input;
  input.exhaustive = true;
  vaov::for_each_instance(m, Party::kP1, [&](const Instance& instance) {
    input.instances.push_back(vaov::io::with_default_labels(instance));
    input.raw.push_back(vaov::io::to_json(input.instances.back()));
  });
  return input;
}

VerifyInput corpus_input(const std::string& path) {
  const json j = read_json(path);
  VerifyInput input;
  input.instances = vaov::io::parse_corpus(j).instances;
  if (j.is_object() && j.contains("instances")) {
    for (const auto& inst : j["instances"]) input.raw.push_back(inst);
  } else {
    input.raw.push_back(j);
  }
  for (const auto& li : input.instances) {
    if (li.instance.size() > vaov::kDefaultSolveBound) {
      throw vaov::ValidationError("instances", "verification needs m <= " +
                                                   std::to_string(vaov::kDefaultSolveBound));
    }
  }
  return input;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating-offers negotiation: equilibrium, compromise, maxmin and verification"};
  app.require_subcommand(1);

  std::string file;
  std::string first_mover;
  std::string out;
  std::uint64_t seed = 0;

  auto* spe = app.add_subcommand("spe", "Equilibrium transcript for an instance file");
  spe->add_option("file", file, "Instance JSON")->required();
  spe->add_option("--first-mover", first_mover, "Override the first mover (p1|p2)");

  auto* rc = app.add_subcommand("rc", "Rational Compromise set and v*");
  rc->add_option("file", file, "Instance JSON")->required();
  rc->add_option("--first-mover", first_mover, "Override the first mover (p1|p2)");

  std::string policy1 = "spe";
  std::string policy2 = "spe";
  std::string informed;
  auto* play = app.add_subcommand("play", "Run a negotiation between two named policies");
  play->add_option("file", file, "Instance JSON")->required();
  play->add_option("--policy1", policy1, "spe|maxmin|maxmin-heuristic|informed|adversary");
  play->add_option("--policy2", policy2, "spe|maxmin|maxmin-heuristic|informed|adversary");
  play->add_option("--informed", informed, "Which party plays the informed policy (p1|p2)");
  play->add_option("--first-mover", first_mover, "Override the first mover (p1|p2)");

  std::string against = "maxmin";
  std::string focal = "p1";
  auto* maxmin = app.add_subcommand("maxmin", "Maxmin play: vs maxmin, vs the adversary, or vs an informed party");
  maxmin->add_option("file", file, "Instance JSON")->required();
  maxmin->add_option("--against", against, "maxmin|adversary|informed")
      ->check(CLI::IsMember({"maxmin", "adversary", "informed"}));
  maxmin->add_option("--focal", focal, "The party playing maxmin against an adversary or informed party");
  maxmin->add_option("--informed", informed, "Alias for the informed party (the other one plays maxmin)");
  maxmin->add_option("--first-mover", first_mover, "Override the first mover (p1|p2)");

  std::size_t gen_m = 0;
  std::size_t gen_count = 0;
  auto* gen = app.add_subcommand("gen", "Generate a seeded corpus of uniformly random instances");
  gen->add_option("m", gen_m, "Number of outcomes")->required();
  gen->add_option("count", gen_count, "Number of instances")->required();
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out, "Write the corpus here instead of stdout");
  gen->add_option("--first-mover", first_mover, "First mover of every instance (p1|p2)");

  std::size_t exhaustive = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check every instance of a corpus against the oracle");
  verify->add_option("file", file, "Corpus or instance JSON");
  verify->add_option("--exhaustive", exhaustive, "Verify all order pairs at this m (<= 5) instead");
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  verify->add_option("--out", out, "Directory for failing-instance dumps")->default_str("verify-failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kBadInput;
  }

  try {
    if (*spe) {
      const LabeledInstance li = load_instance(file, first_mover);
      emit(vaov::io::to_json(vaov::spe_transcript(li.instance), li));
    } else if (*rc) {
      const LabeledInstance li = load_instance(file, first_mover);
      const vaov::RcResult r = vaov::rc_set(li.instance);
      emit({{"rc", labels_of(li, r.outcomes)}, {"v", r.v_star}});
    } else if (*play) {
      const LabeledInstance li = load_instance(file, first_mover);
      emit(play_json(li, policy1, policy2, parse_party_flag(informed, "--informed")));
    } else if (*maxmin) {
      const LabeledInstance li = load_instance(file, first_mover);
      Party self = *parse_party_flag(focal, "--focal");
      if (against == "informed" && !informed.empty()) self = vaov::other(*parse_party_flag(informed, "--informed"));
      std::string names[2] = {"maxmin", "maxmin"};
      if (against != "maxmin") names[vaov::index_of(vaov::other(self))] = against;
      json j = play_json(li, names[0], names[1], vaov::other(self));
      const vaov::OutcomeSet upper = vaov::upper_set(vaov::new_state(li.instance), li.instance, self);
      j["focal"] = std::string(vaov::to_string(self));
      j["upper_set"] = labels_of(li, upper.to_vector());
      emit(j);
    } else if (*gen) {
      if (gen_m < 1) throw vaov::ValidationError("m", "must be at least 1");
      if (gen_count < 1) throw vaov::ValidationError("count", "must be at least 1");
      vaov::io::Corpus corpus = vaov::io::generate_corpus(gen_m, gen_count, seed);
      if (auto p = parse_party_flag(first_mover, "--first-mover")) {
        for (auto& li : corpus.instances) li.instance = li.instance.with_first_mover(*p);
      }
      const std::string text = vaov::io::to_json(corpus).dump(2) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
        emit({{"written", out}, {"count", gen_count}, {"m", gen_m}, {"seed", seed}});
      }
    } else if (*verify) {
      if (file.empty() == (exhaustive == 0)) {
        throw vaov::ValidationError("verify", "give either a corpus file or --exhaustive M");
      }
      const VerifyInput input = exhaustive != 0 ? exhaustive_input(exhaustive) : corpus_input(file);
      bool ok = false;
      json report = run_verify(input, seed, out.empty() ? "verify-failures" : out, ok);
      if (exhaustive != 0) {
        report["m"] = exhaustive;
        report["first_mover"] = "p1";
      }
      emit(report);
      return ok ? 0 : kCheckFailed;
    }
  } catch (const vaov::ValidationError& e) {
    std::cerr << "vaov: invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const IoError& e) {
    std::cerr << "vaov: " << e.what() << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "vaov: invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const vaov::CapacityError& e) {
    std::cerr << "vaov: " << e.what() << "\n";
    return kBadInput;
  } catch (const vaov::DomainError& e) {
    std::cerr << "vaov: " << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
