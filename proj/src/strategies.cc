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

#include "epicoord/strategies.h"

#include <array>
#include <stdexcept>
#include <utility>

namespace epicoord {
namespace {

void CheckLevel(int level) {
  if (level < 0) {
    throw std::invalid_argument("reasoning level must be >= 0, got " +
                                std::to_string(level));
  }
}

using Memo = std::vector<std::vector<std::vector<std::optional<Rational>>>>;

std::optional<Rational>& MemoSlot(Memo& memo, int level, Player i, int state,
                                  int num_states) {
  if (static_cast<int>(memo.size()) <= level) {
    memo.resize(level + 1, std::vector<std::vector<std::optional<Rational>>>(
                               kNumPlayers,
                               std::vector<std::optional<Rational>>(num_states)));
  }
  return memo[level][i][state];
}

// {w : P_i(target | w) = 1}.
Event KnowsEvent(const InformationStructure& s, const Event& target, Player i) {
  Event knows(s.num_states());
  for (int w = 0; w < s.num_states(); ++w) {
    if (ConditionalBelief(s, i, target, w) == 1) knows.Insert(w);
  }
  return knows;
}

}  // namespace

void PayoffParams::Validate() const {
  const Rational& max_bd = b > d ? b : d;
  if (!(a > c && c > max_bd)) {
    throw std::invalid_argument("payoffs " + ToString() +
                                " violate a > c > max(b, d)");
  }
}

PayoffParams PayoffParams::Parse(std::string_view text) {
  std::array<Rational, 4> values;
  size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    size_t end = text.find(',', start);
    if ((k < 3) == (end == std::string_view::npos)) {
      throw ParseError("payoffs must be four comma-separated numbers a,b,c,d: '" +
                       std::string(text) + "'");
    }
    if (end == std::string_view::npos) end = text.size();
    values[k] = ParseRational(text.substr(start, end - start));
    start = end + 1;
  }
  PayoffParams p{values[0], values[1], values[2], values[3]};
  p.Validate();
  return p;
}

std::string PayoffParams::ToString() const {
  return "(" + FormatRational(a) + ", " + FormatRational(b) + ", " +
         FormatRational(c) + ", " + FormatRational(d) + ")";
}

PayoffParams PayoffCondition1() {
  return {Rational(11, 10), Rational(0), Rational(1), Rational(2, 5)};
}

PayoffParams RiskPayoffs(const Rational& p_star) {
  PayoffParams p{Rational(1), Rational(0), p_star, Rational(0)};
  p.Validate();
  return p;
}

char ActionName(Action action) { return action == Action::kA ? 'A' : 'B'; }

Rational RiskThreshold(const PayoffParams& payoffs) {
  payoffs.Validate();
  return (payoffs.c - payoffs.b) / (payoffs.a - payoffs.b);
}

Action RationalPBeliefAction(const InformationStructure& s,
                             const Event& target, const PayoffParams& payoffs,
                             Player i, int state) {
  return CommonPBelief(s, target, i, state) > RiskThreshold(payoffs)
             ? Action::kA
             : Action::kB;
}

Action RationalPBeliefAction(const InformationStructure& s,
                             const EvidentLadder& ladder,
                             const PayoffParams& payoffs, Player i, int state) {
  return ladder.CommonPBeliefAt(s, i, state) > RiskThreshold(payoffs)
             ? Action::kA
             : Action::kB;
}

Rational MatchedPBeliefProb(const InformationStructure& s, const Event& target,
                            Player i, int state) {
  return CommonPBelief(s, target, i, state);
}

IteratedMaximization::IteratedMaximization(const InformationStructure& s,
                                           const Event& target,
                                           const PayoffParams& payoffs,
                                           Level0Rule level0, bool memoize)
    : s_(s), target_(target), payoffs_(payoffs), level0_(level0),
      memoize_(memoize) {
  payoffs_.Validate();
}

Rational IteratedMaximization::ProbA(int level, Player i, int state) {
  CheckLevel(level);
  CheckPlayer(i);
  std::optional<Rational>* slot = nullptr;
  if (memoize_) {
    slot = &MemoSlot(memo_, level, i, state, s_.num_states());
    if (*slot) return **slot;
  }
  Rational result;
  if (level == 0) {
    switch (level0_) {
      case Level0Rule::kBeliefThreshold:
        result = ConditionalBelief(s_, i, target_, state) > RiskThreshold(payoffs_)
                     ? 1
                     : 0;
        break;
      case Level0Rule::kAlwaysA:
        result = 1;
        break;
      case Level0Rule::kUniformRandom:
        result = Rational(1, 2);
        break;
    }
  } else {
    const Rational& block_mass = s_.BlockMeasure(i, state);
    Rational value = 0;
    for (int w : s_.partition(i).BlockContaining(state)) {
      const Rational f = ProbA(level - 1, Other(i), w);
      const Rational px = ConditionalBelief(s_, i, target_, w);
      value += s_.measure(w) / block_mass *
               (px * f * payoffs_.a + (1 - px) * f * payoffs_.d +
                (1 - f) * payoffs_.b);
    }
    result = value > payoffs_.c ? 1 : 0;
  }
  if (slot) *slot = result;
  return result;
}

Action IteratedMaximization::Act(int level, Player i, int state) {
  const Rational p = ProbA(level, i, state);
  if (p == 1) return Action::kA;
  if (p == 0) return Action::kB;
  throw std::logic_error("level-0 uniform play is mixed, not a pure action");
}

IteratedMatching::IteratedMatching(const InformationStructure& s,
                                   const Event& target, bool memoize)
    : s_(s), target_(target), memoize_(memoize) {}

Rational IteratedMatching::ProbA(int level, Player i, int state) {
  CheckLevel(level);
  CheckPlayer(i);
  std::optional<Rational>* slot = nullptr;
  if (memoize_) {
    slot = &MemoSlot(memo_, level, i, state, s_.num_states());
    if (*slot) return **slot;
  }
  Rational result = ConditionalBelief(s_, i, target_, state);
  if (level > 0) {
    const Rational& block_mass = s_.BlockMeasure(i, state);
    Rational companion = 0;
    for (int w : s_.partition(i).BlockContaining(state)) {
      companion += s_.measure(w) / block_mass * ProbA(level - 1, Other(i), w);
    }
    result *= companion;
  }
  if (slot) *slot = result;
  return result;
}

Action PrivateHeuristic(const InformationStructure& s, const Event& target,
                        Player i, int state) {
  return ConditionalBelief(s, i, target, state) == 1 ? Action::kA : Action::kB;
}

Action PairHeuristic(const InformationStructure& s, const Event& target,
                     Player i, int state) {
  if (ConditionalBelief(s, i, target, state) != 1) return Action::kB;
  const Event other_knows = KnowsEvent(s, target, Other(i));
  return ConditionalBelief(s, i, other_knows, state) == 1 ? Action::kA
                                                          : Action::kB;
}

Action CognitiveStrategy(const InformationStructure& s, const Event& target,
                         const PayoffParams& payoffs, Player i, int state) {
  return CognitiveStrategy(s, target, BuildEvidentLadder(s, target), payoffs, i,
                           state);
}

Action CognitiveStrategy(const InformationStructure& s, const Event& target,
                         const EvidentLadder& ladder,
                         const PayoffParams& payoffs, Player i, int state) {
  CheckPlayer(i);
  payoffs.Validate();
  const Rational& block_mass = s.BlockMeasure(i, state);
  Rational value = 0;
  for (int w : s.partition(i).BlockContaining(state)) {
    const Rational q = ladder.CommonPBeliefAt(s, Other(i), w);
    const Rational& match = target.Contains(w) ? payoffs.a : payoffs.d;
    value += s.measure(w) / block_mass * (q * match + (1 - q) * payoffs.b);
  }
  return value > payoffs.c ? Action::kA : Action::kB;
}

namespace {
constexpr std::array<std::pair<StrategyKind, std::string_view>, 8> kNames = {{
    {StrategyKind::kRational, "rational"},
    {StrategyKind::kMatched, "matched"},
    {StrategyKind::kIterMax, "itermax"},
    {StrategyKind::kIterMatch, "itermatch"},
    {StrategyKind::kPrivate, "private"},
    {StrategyKind::kPair, "pair"},
    {StrategyKind::kCognitive, "cognitive"},
    {StrategyKind::kAlwaysB, "always_b"},
}};
}  // namespace

std::string_view StrategyName(StrategyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<StrategyKind> ParseStrategyKind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool UsesLevel(StrategyKind kind) {
  return kind == StrategyKind::kIterMax || kind == StrategyKind::kIterMatch;
}

Rational StrategyProbA(StrategyKind kind, const InformationStructure& s,
                       const Event& target, const PayoffParams& payoffs,
                       int level, Player i, int state) {
  auto as_prob = [](Action a) { return Rational(a == Action::kA ? 1 : 0); };
  switch (kind) {
    case StrategyKind::kRational:
      return as_prob(RationalPBeliefAction(s, target, payoffs, i, state));
    case StrategyKind::kMatched:
      return MatchedPBeliefProb(s, target, i, state);
    case StrategyKind::kIterMax:
      return IteratedMaximization(s, target, payoffs).ProbA(level, i, state);
    case StrategyKind::kIterMatch:
      return IteratedMatching(s, target).ProbA(level, i, state);
    case StrategyKind::kPrivate:
      return as_prob(PrivateHeuristic(s, target, i, state));
    case StrategyKind::kPair:
      return as_prob(PairHeuristic(s, target, i, state));
    case StrategyKind::kCognitive:
      return as_prob(CognitiveStrategy(s, target, payoffs, i, state));
    case StrategyKind::kAlwaysB:
      return 0;
  }
  throw std::logic_error("unhandled strategy kind");
}

}  // namespace epicoord
