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

#include "epicoord/game.h"

#include <stdexcept>

#include "epicoord/epistemic.h"

namespace epicoord {

void GameInstance::Validate() const {
  payoffs.Validate();
  if (target.universe_size() != structure.num_states()) {
    throw std::invalid_argument("target event is over a different state space");
  }
}

Policy Policy::Constant(int num_states, const Rational& prob_a) {
  Policy p;
  for (auto& v : p.prob_a_) v.assign(num_states, prob_a);
  return p;
}

Policy Policy::FromFunction(int num_states,
                            const std::function<Rational(Player, int)>& prob_a) {
  Policy p;
  for (Player i = 0; i < kNumPlayers; ++i) {
    p.prob_a_[i].reserve(num_states);
    for (int w = 0; w < num_states; ++w) p.prob_a_[i].push_back(prob_a(i, w));
  }
  return p;
}

bool Policy::IsMeasurable(const InformationStructure& s) const {
  for (Player i = 0; i < kNumPlayers; ++i) {
    for (const auto& block : s.partition(i).blocks()) {
      for (int w : block) {
        if (prob_a_[i][w] != prob_a_[i][block.front()]) return false;
      }
    }
  }
  return true;
}

Rational ExpectedUtility(const GameInstance& g, Player i, int state,
                         const Rational& my_prob_a, const Policy& companion) {
  CheckPlayer(i);
  const auto& s = g.structure;
  const auto& u = g.payoffs;
  const Rational& block_mass = s.BlockMeasure(i, state);
  Rational play_a = 0;
  for (int w : s.partition(i).BlockContaining(state)) {
    const Rational& q = companion.ProbA(Other(i), w);
    const Rational& match = g.target.Contains(w) ? u.a : u.d;
    play_a += s.measure(w) / block_mass * (q * match + (1 - q) * u.b);
  }
  return my_prob_a * play_a + (1 - my_prob_a) * u.c;
}

bool NoiselessCheck(const GameInstance& g) {
  const Rational prior = g.structure.Measure(g.target);
  for (Player i = 0; i < kNumPlayers; ++i) {
    for (int w = 0; w < g.structure.num_states(); ++w) {
      const Rational belief = ConditionalBelief(g.structure, i, g.target, w);
      if (belief > prior && belief != 1) return false;
    }
  }
  return true;
}

Policy RationalPBeliefPolicy(const GameInstance& g) {
  const EvidentLadder ladder = BuildEvidentLadder(g.structure, g.target);
  return Policy::FromFunction(g.structure.num_states(), [&](Player i, int w) {
    return Rational(RationalPBeliefAction(g.structure, ladder, g.payoffs, i, w) ==
                            Action::kA
                        ? 1
                        : 0);
  });
}

std::string_view StatusName(EquilibriumReport::Status status) {
  switch (status) {
    case EquilibriumReport::Status::kPass:
      return "PASS";
    case EquilibriumReport::Status::kFail:
      return "FAIL";
    case EquilibriumReport::Status::kNotApplicable:
      return "N-A";
  }
  return "?";
}

EquilibriumReport VerifyEquilibrium(const GameInstance& g) {
  g.Validate();
  EquilibriumReport report;
  const Rational p_star = RiskThreshold(g.payoffs);
  const Rational prior = g.structure.Measure(g.target);
  if (!(p_star > prior)) {
    report.status = EquilibriumReport::Status::kNotApplicable;
    report.reason = "risk threshold " + FormatRational(p_star) +
                    " does not exceed the prior " + FormatRational(prior);
    return report;
  }
  if (!NoiselessCheck(g)) {
    report.status = EquilibriumReport::Status::kNotApplicable;
    report.reason = "messages are noisy: some belief in x = 1 rises above the "
                    "prior without reaching certainty";
    return report;
  }
  const Policy profile = RationalPBeliefPolicy(g);
  for (Player i = 0; i < kNumPlayers; ++i) {
    for (int w = 0; w < g.structure.num_states(); ++w) {
      const Rational& mine = profile.ProbA(i, w);
      const Rational prescribed = ExpectedUtility(g, i, w, mine, profile);
      const Rational deviation = ExpectedUtility(g, i, w, 1 - mine, profile);
      ++report.checked;
      if (deviation > prescribed) {
        report.violations.push_back(
            {i, w, mine == 1 ? Action::kA : Action::kB, deviation - prescribed});
      }
    }
  }
  report.status = report.violations.empty() ? EquilibriumReport::Status::kPass
                                            : EquilibriumReport::Status::kFail;
  return report;
}

}  // namespace epicoord
