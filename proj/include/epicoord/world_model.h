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

#ifndef EPICOORD_WORLD_MODEL_H_
#define EPICOORD_WORLD_MODEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epicoord/information_structure.h"
#include "epicoord/rational.h"

namespace epicoord {

// Raised for malformed world-model specs. The message names the offending
// variable or rule.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Bernoulli variable. When any gate variable is 0 the variable is forced
// to 0 with probability 1; otherwise it is 1 with probability `bias`.
struct VariableSpec {
  std::string name;
  Rational bias;
  std::vector<std::string> gate;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

// When every guard variable is 1, `player` observes the values of
// `observed`, in order.
struct ObservationRule {
  std::vector<std::string> guard;
  Player player = 0;
  std::vector<std::string> observed;

  friend bool operator==(const ObservationRule&,
                         const ObservationRule&) = default;
};

// Declarative generative process. Variables are drawn in declaration order
// and observation rules are replayed in declaration order.
struct WorldModelSpec {
  std::vector<VariableSpec> variables;
  std::vector<ObservationRule> observations;

  // Index of the named variable, or nullopt.
  std::optional<int> VariableIndex(std::string_view name) const;

  friend bool operator==(const WorldModelSpec&,
                         const WorldModelSpec&) = default;
};

// Name of the variable whose value-1 event players try to coordinate on.
inline constexpr std::string_view kCoordinationVariable = "x";

// Throws SpecError on duplicate names, biases outside [0, 1], gates that
// reference undeclared or later variables, rules that reference undeclared
// variables, bad player ids, or a missing `x` variable.
void ValidateSpec(const WorldModelSpec& spec);

// One value per declared variable, in declaration order.
using Assignment = std::vector<int>;

struct StateSpace {
  std::vector<Assignment> states;
  std::vector<Rational> measure;

  int size() const { return static_cast<int>(states.size()); }
  std::optional<int> Find(const Assignment& assignment) const;
};

// Observed values tagged by the index of the rule that produced them.
using ObservationTrace = std::vector<std::pair<int, std::vector<int>>>;

// Every positive-measure assignment exactly once, in lexicographic order
// of the assignment tuple.
StateSpace EnumerateStates(const WorldModelSpec& spec);

ObservationTrace RunObservations(const WorldModelSpec& spec, Player player,
                                 const Assignment& state);

// Groups states with identical observation traces for `player`.
Partition BuildInformationPartition(const WorldModelSpec& spec,
                                    const StateSpace& space, Player player);

// The spec together with everything derived from it.
struct WorldModel {
  WorldModelSpec spec;
  StateSpace space;
  InformationStructure structure;

  // Throws std::invalid_argument when the assignment has zero measure or
  // the wrong length.
  int StateIndex(const Assignment& assignment) const;
  // {state : x(state) = 1}.
  Event CoordinationEvent() const;
};

WorldModel BuildWorldModel(WorldModelSpec spec);

// Parses a conjunction such as "x=1" or "visit_0=1 & tell_plan_0=0"
// (',' also separates conjuncts).
Event ParseEventPredicate(const WorldModel& model, std::string_view predicate);

// "1,1,0,1,0" or "(1,1,0,1,0)".
Assignment ParseAssignment(std::string_view text);
// "(1,1,0,1,0)".
std::string FormatAssignment(const Assignment& assignment);

// The messenger process: x ~ Bernoulli(delta), each player is visited with
// probability 1/2, and a visited player is told the messenger's plan with
// probability 1/2.
WorldModelSpec BuiltinMessenger(const Rational& delta);
// The loudspeaker process: x ~ Bernoulli(delta), broadcast to both players
// with probability 1/2.
WorldModelSpec BuiltinLoudspeaker(const Rational& delta);

}  // namespace epicoord

#endif  // EPICOORD_WORLD_MODEL_H_
