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

#include "epicoord/experiments.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace epicoord {
namespace {

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string_view ConditionName(Condition condition) {
  switch (condition) {
    case Condition::kPrivate:
      return "private";
    case Condition::kSecondary:
      return "secondary";
    case Condition::kTertiary:
      return "tertiary";
    case Condition::kCommonKnowledge:
      return "common";
  }
  return "?";
}

std::optional<Condition> ParseCondition(std::string_view name) {
  for (Condition c : kAllConditions) {
    if (ConditionName(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<KnowledgeCondition> ThomasConditions(const Rational& delta) {
  if (!(delta > 0 && delta < 1)) {
    throw std::invalid_argument("delta must lie in (0, 1), got " +
                                FormatRational(delta));
  }
  const WorldModelSpec messenger = BuiltinMessenger(delta);
  // Tuples are (x, visit_0, visit_1, tell_plan_0, tell_plan_1) and
  // (x, broadcast). The Private state reads the messenger as announcing
  // that it will not visit the other player.
  return {
      {Condition::kPrivate, messenger, {1, 1, 0, 1, 0}, 0},
      {Condition::kSecondary, messenger, {1, 1, 1, 0, 1}, 1},
      {Condition::kTertiary, messenger, {1, 1, 1, 1, 0}, 0},
      {Condition::kCommonKnowledge, BuiltinLoudspeaker(delta), {1, 1}, 0},
  };
}

Scenario::Scenario(std::vector<KnowledgeCondition> conditions) {
  std::vector<std::pair<const WorldModelSpec*, std::shared_ptr<const WorldModel>>> built;
  std::vector<std::shared_ptr<const EvidentLadder>> ladders;
  for (auto& kc : conditions) {
    CheckPlayer(kc.participant);
    std::shared_ptr<const WorldModel> model;
    std::shared_ptr<const EvidentLadder> ladder;
    for (size_t k = 0; k < built.size(); ++k) {
      const WorldModelSpec& other = *built[k].first;
      if (other == kc.model) {
        model = built[k].second;
        ladder = ladders[k];
        break;
      }
    }
    if (!model) {
      model = std::make_shared<const WorldModel>(BuildWorldModel(kc.model));
      ladder = std::make_shared<const EvidentLadder>(
          BuildEvidentLadder(model->structure, model->CoordinationEvent()));
      built.emplace_back(&model->spec, model);
      ladders.push_back(ladder);
    }
    const int state = model->StateIndex(kc.state);
    Event target = model->CoordinationEvent();
    entries_.push_back({std::move(kc), model, std::move(target), state, ladder});
  }
}

Scenario Scenario::Thomas(const Rational& delta) {
  return Scenario(ThomasConditions(delta));
}

const Scenario::Entry& Scenario::at(Condition condition) const {
  for (const auto& e : entries_) {
    if (e.condition.condition == condition) return e;
  }
  throw std::out_of_range("scenario has no '" +
                          std::string(ConditionName(condition)) + "' condition");
}

HumanData ParseHumanData(std::string_view csv_text) {
  std::stringstream in{std::string(csv_text)};
  std::string line;
  int line_no = 0;
  // Blank lines and lines starting with '#' are ignored everywhere.
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string trimmed = Trim(line);
      if (!trimmed.empty() && trimmed.front() != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw DataError("human data is empty");
  const auto header = SplitCsvLine(line);
  if (header != std::vector<std::string>{"condition", "n", "prob_a"}) {
    throw DataError("human data header must be 'condition,n,prob_a', got '" +
                    line + "'");
  }
  HumanData data;
  std::array<bool, kNumConditions> seen{};
  while (next_line()) {
    const auto fields = SplitCsvLine(line);
    const std::string where = "human data line " + std::to_string(line_no);
    if (fields.size() != 3) throw DataError(where + ": expected 3 fields");
    auto condition = ParseCondition(fields[0]);
    if (!condition) {
      throw DataError(where + ": unknown condition '" + fields[0] +
                      "' (expected private, secondary, tertiary or common)");
    }
    const int index = static_cast<int>(*condition);
    if (seen[index]) throw DataError(where + ": duplicate condition '" + fields[0] + "'");
    seen[index] = true;
    HumanObservation obs;
    try {
      size_t used = 0;
      obs.n = std::stoi(fields[1], &used);
      if (used != fields[1].size() || obs.n < 0) throw std::invalid_argument("n");
    } catch (const std::exception&) {
      throw DataError(where + ": n must be a non-negative integer");
    }
    try {
      obs.prob_a = ParseRational(fields[2]);
    } catch (const ParseError& e) {
      throw DataError(where + ": " + e.what());
    }
    if (obs.prob_a < 0 || obs.prob_a > 1) {
      throw DataError(where + ": prob_a must lie in [0, 1]");
    }
    data.by_condition[index] = obs;
  }
  for (Condition c : kAllConditions) {
    if (!seen[static_cast<int>(c)]) {
      throw DataError("human data is missing condition '" +
                      std::string(ConditionName(c)) + "'");
    }
  }
  return data;
}

HumanData LoadHumanData(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open human data file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseHumanData(buffer.str());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

PredictionTable Predict(const Scenario& scenario, StrategyKind model, int level,
                        const PayoffParams& payoffs) {
  PredictionTable table{model, UsesLevel(model) ? std::optional<int>(level)
                                                : std::nullopt, {}};
  std::array<bool, kNumConditions> seen{};
  for (const auto& e : scenario.entries()) {
    const auto& s = e.model->structure;
    const Player i = e.condition.participant;
    Rational p;
    switch (model) {
      case StrategyKind::kMatched:
        p = e.ladder->CommonPBeliefAt(s, i, e.state);
        break;
      case StrategyKind::kRational:
        p = RationalPBeliefAction(s, *e.ladder, payoffs, i, e.state) == Action::kA ? 1 : 0;
        break;
      case StrategyKind::kCognitive:
        p = CognitiveStrategy(s, e.target, *e.ladder, payoffs, i, e.state) == Action::kA ? 1 : 0;
        break;
      default:
        p = StrategyProbA(model, s, e.target, payoffs, level, i, e.state);
    }
    const int index = static_cast<int>(e.condition.condition);
    seen[index] = true;
    table.prob_a[index] = p;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("scenario does not cover all four conditions");
  }
  return table;
}

Rational Mse(const PredictionTable& prediction, const HumanData& human) {
  Rational total = 0;
  for (Condition c : kAllConditions) {
    const Rational diff = prediction.at(c) - human.at(c).prob_a;
    total += diff * diff;
  }
  return total / kNumConditions;
}

LevelFit FitLevel(const Scenario& scenario, StrategyKind model,
                  const PayoffParams& payoffs, const HumanData& human,
                  int max_level) {
  LevelFit fit;
  for (int k = 0; k <= max_level; ++k) {
    Rational err = Mse(Predict(scenario, model, k, payoffs), human);
    if (k == 0 || err < fit.mse) {
      fit.level = k;
      fit.mse = err;
    }
    fit.mse_by_level.push_back(std::move(err));
  }
  return fit;
}

std::vector<ComparisonRow> CompareModels(const Scenario& scenario,
                                         const PayoffParams& payoffs,
                                         const HumanData& human) {
  std::vector<ComparisonRow> rows;
  for (StrategyKind kind : {StrategyKind::kRational, StrategyKind::kMatched,
                            StrategyKind::kIterMax, StrategyKind::kIterMatch}) {
    const int level =
        UsesLevel(kind) ? FitLevel(scenario, kind, payoffs, human).level : 0;
    PredictionTable table = Predict(scenario, kind, level, payoffs);
    Rational err = Mse(table, human);
    rows.push_back({std::move(table), std::move(err)});
  }
  return rows;
}

Rational MarginalValue(const Scenario& scenario, StrategyKind agent,
                       const HumanData& human, const PayoffParams& payoffs) {
  payoffs.Validate();
  Rational total = 0;
  for (const auto& e : scenario.entries()) {
    const auto& s = e.model->structure;
    const Player seat = Other(e.condition.participant);
    Rational mine;
    if (agent == StrategyKind::kCognitive) {
      mine = CognitiveStrategy(s, e.target, *e.ladder, payoffs, seat, e.state) ==
                     Action::kA
                 ? 1
                 : 0;
    } else {
      mine = StrategyProbA(agent, s, e.target, payoffs, 0, seat, e.state);
    }
    const Rational& h = human.at(e.condition.condition).prob_a;
    const Rational& match = e.target.Contains(e.state) ? payoffs.a : payoffs.d;
    total += mine * (h * match + (1 - h) * payoffs.b - payoffs.c);
  }
  return total;
}

SweepResult HumanAgentSweep(const std::vector<Rational>& grid,
                            const Scenario& scenario, const HumanData& human,
                            int threads) {
  for (size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0 && grid[k] < 1) || (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw std::invalid_argument("risk grid must be strictly increasing in (0, 1)");
    }
  }
  SweepResult result;
  result.grid = grid;
  result.strategies.assign(kSweepStrategies.begin(), kSweepStrategies.end());
  result.marginal_value.assign(result.strategies.size(),
                               std::vector<Rational>(grid.size()));
  auto work = [&](size_t begin, size_t stride) {
    for (size_t g = begin; g < grid.size(); g += stride) {
      const PayoffParams payoffs = RiskPayoffs(grid[g]);
      for (size_t k = 0; k < result.strategies.size(); ++k) {
        result.marginal_value[k][g] =
            MarginalValue(scenario, result.strategies[k], human, payoffs);
      }
    }
  };
  const size_t n = static_cast<size_t>(std::max(1, threads));
  if (n == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
    for (auto& t : pool) t.join();
  }
  return result;
}

std::vector<Rational> DefaultRiskGrid() {
  std::vector<Rational> grid;
  for (int k = 1; k <= 19; ++k) grid.emplace_back(k, 20);
  for (auto& g : grid) g.canonicalize();
  return grid;
}

std::vector<Rational> ParseGrid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos
                          ? std::string_view::npos
                          : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ParseError("grid must be start:step:end, got '" + std::string(text) + "'");
  }
  const Rational start = ParseRational(text.substr(0, first));
  const Rational step = ParseRational(text.substr(first + 1, second - first - 1));
  const Rational end = ParseRational(text.substr(second + 1));
  if (step <= 0) throw ParseError("grid step must be positive");
  if (!(start > 0) || !(end < 1) || start > end) {
    throw ParseError("grid must lie strictly inside (0, 1) with start <= end");
  }
  std::vector<Rational> grid;
  for (Rational p = start; p <= end; p += step) grid.push_back(p);
  return grid;
}

}  // namespace epicoord
