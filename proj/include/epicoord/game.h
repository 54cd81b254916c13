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

#ifndef EPICOORD_GAME_H_
#define EPICOORD_GAME_H_

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "epicoord/information_structure.h"
#include "epicoord/rational.h"
#include "epicoord/strategies.h"

namespace epicoord {

// The coordinated-attack game on an information structure. `target` is the
// event x = 1 that selects the payoff matrix.
struct GameInstance {
  InformationStructure structure;
  PayoffParams payoffs;
  Event target;

  // Throws std::invalid_argument on invalid payoffs or a mismatched event.
  void Validate() const;
};

// Probability of A for every (player, state); carries both pure and mixed
// profiles.
class Policy {
 public:
  static Policy Constant(int num_states, const Rational& prob_a);
  static Policy FromFunction(
      int num_states, const std::function<Rational(Player, int)>& prob_a);

  const Rational& ProbA(Player i, int state) const {
    return prob_a_[i].at(state);
  }
  int num_states() const { return static_cast<int>(prob_a_[0].size()); }
  // Constant on every block of each player's partition.
  bool IsMeasurable(const InformationStructure& s) const;

 private:
  std::array<std::vector<Rational>, kNumPlayers> prob_a_;
};

// Expected payoff to player i at `state` when i plays A with probability
// `my_prob_a` and the other player follows `companion`, averaging over
// Pi_i(state).
Rational ExpectedUtility(const GameInstance& g, Player i, int state,
                         const Rational& my_prob_a, const Policy& companion);

// True iff every belief in x = 1 above the prior mu(x = 1) is certainty.
bool NoiselessCheck(const GameInstance& g);

// Both players using the rational p-belief strategy.
Policy RationalPBeliefPolicy(const GameInstance& g);

struct EquilibriumViolation {
  Player player;
  int state;
  Action prescribed;
  // EU(other action) - EU(prescribed action) > 0.
  Rational gap;
};

struct EquilibriumReport {
  enum class Status { kPass, kFail, kNotApplicable };
  Status status = Status::kPass;
  // Why the hypotheses failed, for kNotApplicable.
  std::string reason;
  std::vector<EquilibriumViolation> violations;
  int checked = 0;
};

std::string_view StatusName(EquilibriumReport::Status status);

// Checks at every (player, state) that the rational p-belief action is a
// best response to a rational p-belief companion. Only applicable when
// messages are noiseless and p* > mu(x = 1).
EquilibriumReport VerifyEquilibrium(const GameInstance& g);

}  // namespace epicoord

#endif  // EPICOORD_GAME_H_
