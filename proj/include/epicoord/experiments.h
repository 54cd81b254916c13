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

#ifndef EPICOORD_EXPERIMENTS_H_
#define EPICOORD_EXPERIMENTS_H_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "epicoord/epistemic.h"
#include "epicoord/rational.h"
#include "epicoord/strategies.h"
#include "epicoord/world_model.h"

namespace epicoord {

// Raised for malformed or incomplete human-data input.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Condition { kPrivate, kSecondary, kTertiary, kCommonKnowledge };
inline constexpr int kNumConditions = 4;
inline constexpr std::array<Condition, kNumConditions> kAllConditions = {
    Condition::kPrivate, Condition::kSecondary, Condition::kTertiary,
    Condition::kCommonKnowledge};

// "private", "secondary", "tertiary", "common".
std::string_view ConditionName(Condition condition);
std::optional<Condition> ParseCondition(std::string_view name);

// A knowledge scenario: the world model, the true state, and which seat
// the human participant occupies.
struct KnowledgeCondition {
  Condition condition;
  WorldModelSpec model;
  Assignment state;
  Player participant;
};

// Private, Secondary and Tertiary use the messenger model; Common
// Knowledge uses the loudspeaker. Participants sit in seat 0 except in the
// Secondary condition. Throws std::invalid_argument unless 0 < delta < 1.
std::vector<KnowledgeCondition> ThomasConditions(const Rational& delta);

// Knowledge conditions with their world models built once and their
// evident ladders for x = 1 precomputed.
class Scenario {
 public:
  struct Entry {
    KnowledgeCondition condition;
    std::shared_ptr<const WorldModel> model;
    Event target;
    int state;
    std::shared_ptr<const EvidentLadder> ladder;
  };

  explicit Scenario(std::vector<KnowledgeCondition> conditions);
  static Scenario Thomas(const Rational& delta);

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& at(Condition condition) const;

 private:
  std::vector<Entry> entries_;
};

struct HumanObservation {
  int n = 0;
  Rational prob_a;
};

// Empirical proportion of participants choosing A, per condition.
struct HumanData {
  std::array<HumanObservation, kNumConditions> by_condition;

  const HumanObservation& at(Condition c) const {
    return by_condition[static_cast<int>(c)];
  }
};

// CSV with header `condition,n,prob_a`; every condition exactly once.
// Throws DataError.
HumanData ParseHumanData(std::string_view csv_text);
HumanData LoadHumanData(const std::string& path);

struct PredictionTable {
  StrategyKind model;
  std::optional<int> level;
  std::array<Rational, kNumConditions> prob_a;

  const Rational& at(Condition c) const {
    return prob_a[static_cast<int>(c)];
  }
};

// The probability that `model` plays A from the participant's seat at each
// condition's true state.
PredictionTable Predict(const Scenario& scenario, StrategyKind model, int level,
                        const PayoffParams& payoffs);

// Mean over the conditions of the squared prediction error.
Rational Mse(const PredictionTable& prediction, const HumanData& human);

inline constexpr int kMaxFitLevel = 5;

struct LevelFit {
  int level = 0;
  Rational mse;
  // Indexed by level.
  std::vector<Rational> mse_by_level;
};

// Grid search over levels 0..max_level; ties go to the smaller level.
LevelFit FitLevel(const Scenario& scenario, StrategyKind model,
                  const PayoffParams& payoffs, const HumanData& human,
                  int max_level = kMaxFitLevel);

struct ComparisonRow {
  PredictionTable prediction;
  Rational mse;
};

// Rational p-belief, matched p-belief, and the two iterated models at their
// best-fitting levels.
std::vector<ComparisonRow> CompareModels(const Scenario& scenario,
                                         const PayoffParams& payoffs,
                                         const HumanData& human);

// Sum over conditions of the agent's expected payoff from the companion
// seat minus the always-B payoff c. The human plays A with the empirical
// probability for the condition; payoffs are realized at the condition's
// true state.
Rational MarginalValue(const Scenario& scenario, StrategyKind agent,
                       const HumanData& human, const PayoffParams& payoffs);

// Strategies evaluated by the human-agent sweep.
inline constexpr std::array<StrategyKind, 3> kSweepStrategies = {
    StrategyKind::kCognitive, StrategyKind::kPrivate, StrategyKind::kPair};

struct SweepResult {
  std::vector<Rational> grid;
  std::vector<StrategyKind> strategies;
  // [strategy][grid point].
  std::vector<std::vector<Rational>> marginal_value;
};

// Marginal values at payoffs (1, 0, p*, 0) for each p* in `grid`. Grid
// points are evaluated on up to `threads` threads; results do not depend on
// the thread count.
SweepResult HumanAgentSweep(const std::vector<Rational>& grid,
                            const Scenario& scenario, const HumanData& human,
                            int threads = 1);

// 1/20, 2/20, ..., 19/20.
std::vector<Rational> DefaultRiskGrid();
// "start:step:end", inclusive of end when it lies on the grid. Throws
// ParseError unless the points are strictly increasing inside (0, 1).
std::vector<Rational> ParseGrid(std::string_view text);

}  // namespace epicoord

#endif  // EPICOORD_EXPERIMENTS_H_
