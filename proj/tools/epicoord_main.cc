// Copyright 2026 The epicoord Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: partition, pbelief, ladder, act, verify, compare,
// sweep and fuzz.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epicoord/epistemic.h"
#include "epicoord/experiments.h"
#include "epicoord/game.h"
#include "epicoord/model_io.h"
#include "epicoord/oracle.h"
#include "epicoord/rational.h"
#include "epicoord/strategies.h"
#include "epicoord/world_model.h"

namespace epicoord {
namespace {

using nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv };

struct GlobalOptions {
  std::string format = "table";
  std::string out;
};

struct ModelOptions {
  std::string model;
  std::string delta;
};

Format ParseFormat(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  return Format::kTable;
}

std::optional<Rational> OptionalRational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ParseRational(text);
}

WorldModel LoadModel(const ModelOptions& m) {
  return BuildWorldModel(ResolveModel(m.model, OptionalRational(m.delta)));
}

int ThreadBudget() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("EPICOORD_THREADS")) {
    try {
      threads = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("EPICOORD_THREADS must be an integer, got '") +
                       env + "'");
    }
  }
  return threads;
}

std::string Tuples(const WorldModel& model, const std::vector<int>& states,
                   std::string_view separator) {
  std::string out;
  for (size_t k = 0; k < states.size(); ++k) {
    if (k) out += separator;
    out += FormatAssignment(model.space.states[states[k]]);
  }
  return out;
}

std::string RenderPartition(const WorldModel& model, Player player, Format format) {
  const auto& blocks = model.structure.partition(player).blocks();
  std::ostringstream os;
  if (format == Format::kJson) {
    ordered_json doc;
    doc["player"] = player;
    doc["blocks"] = ordered_json::array();
    for (const auto& block : blocks) {
      ordered_json members = ordered_json::array();
      for (int s : block) members.push_back(FormatAssignment(model.space.states[s]));
      doc["blocks"].push_back(members);
    }
    os << doc.dump() << "\n";
  } else if (format == Format::kCsv) {
    os << "block,state\n";
    for (size_t b = 0; b < blocks.size(); ++b) {
      for (int s : blocks[b]) {
        os << b << ",\"" << FormatAssignment(model.space.states[s]) << "\"\n";
      }
    }
  } else {
    for (const auto& block : blocks) os << "{" << Tuples(model, block, ", ") << "}\n";
  }
  return os.str();
}

std::string RenderValue(const std::string& key, const Rational& value, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    ordered_json doc;
    doc[key] = FormatRational(value);
    os << doc.dump() << "\n";
  } else if (format == Format::kCsv) {
    os << key << "\n" << FormatRational(value) << "\n";
  } else {
    os << FormatRationalWithDecimal(value) << "\n";
  }
  return os.str();
}

std::string RenderLadder(const WorldModel& model, const EvidentLadder& ladder,
                         Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    ordered_json doc = ordered_json::array();
    for (const auto& rung : ladder.rungs) {
      ordered_json members = ordered_json::array();
      for (int s : rung.event.Members()) {
        members.push_back(FormatAssignment(model.space.states[s]));
      }
      doc.push_back({{"level", FormatRational(rung.level)}, {"members", members}});
    }
    os << doc.dump() << "\n";
  } else if (format == Format::kCsv) {
    os << "rung,level,state\n";
    for (size_t r = 0; r < ladder.rungs.size(); ++r) {
      for (int s : ladder.rungs[r].event.Members()) {
        os << r << "," << FormatRational(ladder.rungs[r].level) << ",\""
           << FormatAssignment(model.space.states[s]) << "\"\n";
      }
    }
  } else {
    for (const auto& rung : ladder.rungs) {
      os << "level=" << FormatRational(rung.level) << "  members=["
         << Tuples(model, rung.event.Members(), ",") << "]\n";
    }
  }
  return os.str();
}

std::string LevelText(const PredictionTable& t, const char* none) {
  return t.level ? std::to_string(*t.level) : none;
}

// Four significant digits, for human-readable tables only.
std::string ShortDecimal(const Rational& v) {
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v.get_d(),
                                 std::chars_format::general, 4);
  return std::string(buffer, end);
}

std::string RenderComparison(const std::vector<ComparisonRow>& rows, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    ordered_json doc;
    doc["models"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json entry;
      entry["model"] = StrategyName(row.prediction.model);
      entry["k"] = row.prediction.level ? ordered_json(*row.prediction.level)
                                        : ordered_json(nullptr);
      ordered_json predictions;
      for (Condition c : kAllConditions) {
        predictions[std::string(ConditionName(c))] =
            FormatRational(row.prediction.at(c));
      }
      entry["predictions"] = predictions;
      entry["mse"] = FormatRational(row.mse);
      doc["models"].push_back(entry);
    }
    os << doc.dump(2) << "\n";
  } else if (format == Format::kCsv) {
    os << "model,k";
    for (Condition c : kAllConditions) os << "," << ConditionName(c);
    os << ",mse\n";
    for (const auto& row : rows) {
      os << StrategyName(row.prediction.model) << "," << LevelText(row.prediction, "");
      for (Condition c : kAllConditions) os << "," << FormatRational(row.prediction.at(c));
      os << "," << FormatRational(row.mse) << "\n";
    }
  } else {
    auto cell = [](const Rational& v) {
      std::string text = ShortDecimal(v) + " [" + FormatRational(v) + "]";
      text.resize(std::max<size_t>(text.size(), 24), ' ');
      return text;
    };
    os << "model      k  ";
    for (Condition c : kAllConditions) {
      std::string name(ConditionName(c));
      name.resize(24, ' ');
      os << name;
    }
    os << "mse\n";
    for (const auto& row : rows) {
      std::string name(StrategyName(row.prediction.model));
      name.resize(11, ' ');
      os << name << LevelText(row.prediction, "-") << "  ";
      for (Condition c : kAllConditions) os << cell(row.prediction.at(c));
      os << ShortDecimal(row.mse) << " [" << FormatRational(row.mse) << "]\n";
    }
  }
  return os.str();
}

std::string RenderSweep(const SweepResult& sweep, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    ordered_json doc = ordered_json::array();
    for (size_t g = 0; g < sweep.grid.size(); ++g) {
      for (size_t k = 0; k < sweep.strategies.size(); ++k) {
        doc.push_back({{"p_star", FormatRational(sweep.grid[g])},
                       {"strategy", StrategyName(sweep.strategies[k])},
                       {"marginal_value", FormatRational(sweep.marginal_value[k][g])}});
      }
    }
    os << doc.dump(2) << "\n";
  } else {
    os << "p_star,strategy,marginal_value\n";
    for (size_t g = 0; g < sweep.grid.size(); ++g) {
      for (size_t k = 0; k < sweep.strategies.size(); ++k) {
        os << FormatRational(sweep.grid[g]) << "," << StrategyName(sweep.strategies[k])
           << "," << FormatRational(sweep.marginal_value[k][g]) << "\n";
      }
    }
  }
  return os.str();
}

struct FuzzOutcome {
  bool ok = true;
  long queries = 0;
  std::string counterexample;
};

FuzzOutcome Fuzz(std::uint64_t first_seed, int seeds, int states, int threads) {
  FuzzOutcome outcome;
  std::mutex mu;
  // Failures are reported for the smallest failing seed regardless of
  // thread scheduling.
  std::optional<std::uint64_t> failing_seed;
  auto work = [&](int begin, int stride) {
    long local_queries = 0;
    for (int k = begin; k < seeds; k += stride) {
      const std::uint64_t seed = first_seed + k;
      const auto inst = oracle::RandomStructure({seed, states, oracle::MeasureStyle::kRandom});
      const auto& s = inst.structure;
      std::string problem;
      const auto exhaustive_table =
          oracle::BruteForceCommonPBeliefTable(s, inst.target, oracle::kHardMaxStates);
      for (Player i = 0; i < kNumPlayers && problem.empty(); ++i) {
        for (int w = 0; w < s.num_states() && problem.empty(); ++w) {
          ++local_queries;
          const Rational algorithm = CommonPBelief(s, inst.target, i, w);
          const Rational& exhaustive = exhaustive_table[i][w];
          const Rational fixpoint = oracle::CandidateFixpointCommonPBelief(
              s, inst.target, i, w, oracle::kHardMaxStates);
          if (algorithm != exhaustive || exhaustive != fixpoint) {
            problem = "seed " + std::to_string(seed) + " player " + std::to_string(i) +
                      " state " + std::to_string(w) + ": algorithm=" +
                      FormatRational(algorithm) + " exhaustive=" +
                      FormatRational(exhaustive) + " fixpoint=" + FormatRational(fixpoint);
          }
        }
      }
      if (!problem.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failing_seed || seed < *failing_seed) {
          failing_seed = seed;
          outcome.counterexample = problem + "\n" + StructureToJson(s, inst.target);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    outcome.queries += local_queries;
  };
  const int n = std::max(1, std::min(threads, seeds));
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(work, t, n);
  for (auto& t : pool) t.join();
  outcome.ok = !failing_seed.has_value();
  return outcome;
}

void Emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(global.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + global.out + "'");
  out << text;
}

void AddModelOptions(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--model", m.model,
                  "builtin:messenger, builtin:loudspeaker, or a JSON spec file")
      ->required();
  cmd->add_option("--delta", m.delta, "prior of x = 1 (p/q or decimal); default 1/4");
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact common p-belief and coordination strategy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", global.out, "write results to this file instead of stdout");

  ModelOptions model;
  Player player = 0;
  std::string event = "x=1";
  std::string state;
  std::string payoffs_text = "1.1,0,1,0.4";
  std::string strategy;
  int level = 0;
  std::string human;
  std::string delta_text = "1/4";
  std::string grid_text;
  int seeds = 500;
  int states = 8;
  std::uint64_t first_seed = 0;

  auto* partition = app.add_subcommand("partition", "print a player's information partition");
  AddModelOptions(partition, model);
  partition->add_option("--player", player)->required()->check(CLI::Range(0, 1));

  auto* pbelief = app.add_subcommand("pbelief", "perceived maximal common p-belief");
  AddModelOptions(pbelief, model);
  pbelief->add_option("--event", event, "conjunction of var=0|1");
  pbelief->add_option("--player", player)->required()->check(CLI::Range(0, 1));
  pbelief->add_option("--state", state, "comma-separated bits")->required();

  auto* ladder = app.add_subcommand("ladder", "nested maximally evident events");
  AddModelOptions(ladder, model);
  ladder->add_option("--event", event, "conjunction of var=0|1");

  auto* act = app.add_subcommand("act", "evaluate a strategy at a state");
  AddModelOptions(act, model);
  act->add_option("--strategy", strategy)
      ->required()
      ->check(CLI::IsMember({"rational", "matched", "itermax", "itermatch", "private",
                             "pair", "cognitive", "always_b"}));
  act->add_option("--k", level, "reasoning level")->check(CLI::NonNegativeNumber);
  act->add_option("--payoffs", payoffs_text, "a,b,c,d");
  act->add_option("--player", player)->required()->check(CLI::Range(0, 1));
  act->add_option("--state", state, "comma-separated bits")->required();

  auto* verify = app.add_subcommand("verify", "check the rational p-belief equilibrium");
  AddModelOptions(verify, model);
  verify->add_option("--payoffs", payoffs_text, "a,b,c,d");

  auto* compare = app.add_subcommand("compare", "model comparison against human data");
  compare->add_option("--human", human, "CSV: condition,n,prob_a")->required();
  compare->add_option("--delta", delta_text, "prior of x = 1");
  compare->add_option("--payoffs", payoffs_text, "a,b,c,d");

  auto* sweep = app.add_subcommand("sweep", "human-agent coordination risk sweep");
  sweep->add_option("--human", human, "CSV: condition,n,prob_a")->required();
  sweep->add_option("--delta", delta_text, "prior of x = 1");
  sweep->add_option("--grid", grid_text, "start:step:end; default 1/20:1/20:19/20");

  auto* fuzz = app.add_subcommand("fuzz", "algorithm vs brute-force oracle on random structures");
  fuzz->add_option("--seeds", seeds)->check(CLI::PositiveNumber);
  fuzz->add_option("--states", states)->check(CLI::Range(1, oracle::kDefaultMaxStates));
  fuzz->add_option("--first-seed", first_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Format format = ParseFormat(global.format);

  if (*partition) {
    const WorldModel m = LoadModel(model);
    Emit(global, RenderPartition(m, player, format));
  } else if (*pbelief) {
    const WorldModel m = LoadModel(model);
    const Event target = ParseEventPredicate(m, event);
    const int w = m.StateIndex(ParseAssignment(state));
    Emit(global, RenderValue("value", CommonPBelief(m.structure, target, player, w), format));
  } else if (*ladder) {
    const WorldModel m = LoadModel(model);
    const Event target = ParseEventPredicate(m, event);
    Emit(global, RenderLadder(m, BuildEvidentLadder(m.structure, target), format));
  } else if (*act) {
    const WorldModel m = LoadModel(model);
    const PayoffParams payoffs = PayoffParams::Parse(payoffs_text);
    const StrategyKind kind = *ParseStrategyKind(strategy);
    const int w = m.StateIndex(ParseAssignment(state));
    const Rational p =
        StrategyProbA(kind, m.structure, m.CoordinationEvent(), payoffs, level, player, w);
    const bool mixed = kind == StrategyKind::kMatched || kind == StrategyKind::kIterMatch ||
                       (p != 0 && p != 1);
    if (mixed) {
      Emit(global, RenderValue("prob_a", p, format));
    } else {
      const std::string action(1, p == 1 ? 'A' : 'B');
      if (format == Format::kJson) {
        Emit(global, ordered_json{{"action", action}}.dump() + "\n");
      } else if (format == Format::kCsv) {
        Emit(global, "action\n" + action + "\n");
      } else {
        Emit(global, action + "\n");
      }
    }
  } else if (*verify) {
    WorldModel m = LoadModel(model);
    GameInstance g{m.structure, PayoffParams::Parse(payoffs_text), m.CoordinationEvent()};
    const EquilibriumReport report = VerifyEquilibrium(g);
    std::ostringstream os;
    if (format == Format::kJson) {
      ordered_json doc;
      doc["status"] = StatusName(report.status);
      doc["reason"] = report.reason;
      doc["checked"] = report.checked;
      doc["violations"] = ordered_json::array();
      for (const auto& v : report.violations) {
        doc["violations"].push_back({{"player", v.player},
                                     {"state", FormatAssignment(m.space.states[v.state])},
                                     {"prescribed", std::string(1, ActionName(v.prescribed))},
                                     {"gap", FormatRational(v.gap)}});
      }
      os << doc.dump() << "\n";
    } else {
      os << StatusName(report.status);
      if (report.status == EquilibriumReport::Status::kNotApplicable) {
        os << ": " << report.reason;
      } else {
        os << " (" << report.checked << " player-state pairs checked)";
      }
      os << "\n";
      for (const auto& v : report.violations) {
        os << "player " << v.player << " state "
           << FormatAssignment(m.space.states[v.state]) << " prescribed "
           << ActionName(v.prescribed) << " gap " << FormatRational(v.gap) << "\n";
      }
    }
    Emit(global, os.str());
    return report.status == EquilibriumReport::Status::kFail ? 1 : 0;
  } else if (*compare) {
    const HumanData data = LoadHumanData(human);
    const Scenario scenario = Scenario::Thomas(ParseRational(delta_text));
    const PayoffParams payoffs = PayoffParams::Parse(payoffs_text);
    Emit(global, RenderComparison(CompareModels(scenario, payoffs, data), format));
  } else if (*sweep) {
    const HumanData data = LoadHumanData(human);
    const Scenario scenario = Scenario::Thomas(ParseRational(delta_text));
    const auto grid = grid_text.empty() ? DefaultRiskGrid() : ParseGrid(grid_text);
    Emit(global, RenderSweep(HumanAgentSweep(grid, scenario, data, ThreadBudget()), format));
  } else if (*fuzz) {
    const FuzzOutcome outcome = Fuzz(first_seed, seeds, states, ThreadBudget());
    if (!outcome.ok) {
      std::cerr << "MISMATCH " << outcome.counterexample << "\n";
      return 1;
    }
    Emit(global, "OK: " + std::to_string(seeds) + " structures, " +
                     std::to_string(outcome.queries) +
                     " (player, state) queries agree with both oracles\n");
  }
  return 0;
}

}  // namespace
}  // namespace epicoord

int main(int argc, char** argv) {
  try {
    return epicoord::Run(argc, argv);
  } catch (const epicoord::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
