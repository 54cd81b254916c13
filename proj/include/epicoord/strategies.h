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

#ifndef EPICOORD_STRATEGIES_H_
#define EPICOORD_STRATEGIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epicoord/epistemic.h"
#include "epicoord/information_structure.h"
#include "epicoord/rational.h"

namespace epicoord {

// Coordinated-attack payoffs. Both playing A pays a when x = 1 and d when
// x = 0; A against B pays b to the A player; B always pays c.
struct PayoffParams {
  Rational a, b, c, d;

  // Throws std::invalid_argument unless a > c > max(b, d).
  void Validate() const;
  // "a,b,c,d" with rational or decimal entries.
  static PayoffParams Parse(std::string_view text);
  std::string ToString() const;
};

// (1.1, 0, 1, 0.4).
PayoffParams PayoffCondition1();
// (1, 0, p*, 0): the payoffs whose risk threshold is exactly p*.
PayoffParams RiskPayoffs(const Rational& p_star);

enum class Action { kA, kB };
char ActionName(Action action);

// p* = (c - b) / (a - b), in (0, 1) for valid payoffs.
Rational RiskThreshold(const PayoffParams& payoffs);

// A iff the perceived maximal common p-belief in `target` is strictly
// above p*.
Action RationalPBeliefAction(const InformationStructure& s,
                             const Event& target, const PayoffParams& payoffs,
                             Player i, int state);
Action RationalPBeliefAction(const InformationStructure& s,
                             const EvidentLadder& ladder,
                             const PayoffParams& payoffs, Player i, int state);

// Plays A with probability equal to the perceived maximal common p-belief.
Rational MatchedPBeliefProb(const InformationStructure& s, const Event& target,
                            Player i, int state);

// Level-0 behaviour of the iterated maximization model.
enum class Level0Rule {
  kBeliefThreshold,  // A iff P_i(x=1 | w) > p*
  kAlwaysA,
  kUniformRandom,    // A with probability 1/2
};

// Level-k best response to a level-(k-1) companion. The expected payoff of
// A at level k is
//
//   sum_{w' in Pi_i(w)} P_i(w' | w) * ( P_i(x=1 | w') f(w') a
//                                      + P_i(x=0 | w') f(w') d
//                                      + (1 - f(w')) b )
//
// with f the companion's level-(k-1) probability of A; A is played iff it
// strictly exceeds c. Results are memoized per (level, player, state).
class IteratedMaximization {
 public:
  IteratedMaximization(const InformationStructure& s, const Event& target,
                       const PayoffParams& payoffs,
                       Level0Rule level0 = Level0Rule::kBeliefThreshold,
                       bool memoize = true);

  // 0 or 1 for every level except level 0 under kUniformRandom.
  Rational ProbA(int level, Player i, int state);
  // Throws std::logic_error when ProbA is mixed.
  Action Act(int level, Player i, int state);

 private:
  const InformationStructure& s_;
  Event target_;
  PayoffParams payoffs_;
  Level0Rule level0_;
  bool memoize_;
  // [level][player][state].
  std::vector<std::vector<std::vector<std::optional<Rational>>>> memo_;
};

// Level-k probability matching:
//   q^0_i(w) = P_i(x=1 | w),
//   q^k_i(w) = P_i(x=1 | w) * sum_{w' in Pi_i(w)} P_i(w' | w) q^{k-1}_{1-i}(w').
class IteratedMatching {
 public:
  IteratedMatching(const InformationStructure& s, const Event& target,
                   bool memoize = true);
  Rational ProbA(int level, Player i, int state);

 private:
  const InformationStructure& s_;
  Event target_;
  bool memoize_;
  std::vector<std::vector<std::vector<std::optional<Rational>>>> memo_;
};

// A iff the agent knows x = 1.
Action PrivateHeuristic(const InformationStructure& s, const Event& target,
                        Player i, int state);
// A iff the agent knows x = 1 and knows that the other player knows x = 1.
Action PairHeuristic(const InformationStructure& s, const Event& target,
                     Player i, int state);

// Best response to a companion who uses the matched p-belief model. Ties
// resolve to B.
Action CognitiveStrategy(const InformationStructure& s, const Event& target,
                         const PayoffParams& payoffs, Player i, int state);
Action CognitiveStrategy(const InformationStructure& s, const Event& target,
                         const EvidentLadder& ladder,
                         const PayoffParams& payoffs, Player i, int state);

enum class StrategyKind {
  kRational,
  kMatched,
  kIterMax,
  kIterMatch,
  kPrivate,
  kPair,
  kCognitive,
  kAlwaysB,
};

// "rational", "matched", "itermax", "itermatch", "private", "pair",
// "cognitive", "always_b".
std::string_view StrategyName(StrategyKind kind);
std::optional<StrategyKind> ParseStrategyKind(std::string_view name);
bool UsesLevel(StrategyKind kind);

// Probability that `kind` plays A; pure strategies give 0 or 1. `level` is
// ignored by strategies without one.
Rational StrategyProbA(StrategyKind kind, const InformationStructure& s,
                       const Event& target, const PayoffParams& payoffs,
                       int level, Player i, int state);

}  // namespace epicoord

#endif  // EPICOORD_STRATEGIES_H_
