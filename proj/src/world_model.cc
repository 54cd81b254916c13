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

#include "epicoord/world_model.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace epicoord {
namespace {

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<int> ResolveNames(const WorldModelSpec& spec,
                              const std::vector<std::string>& names) {
  std::vector<int> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(*spec.VariableIndex(n));
  return out;
}

void ValidateBias(const Rational& delta, const char* what) {
  if (delta < 0 || delta > 1) {
    throw SpecError(std::string(what) + " must lie in [0, 1], got " +
                    FormatRational(delta));
  }
}

}  // namespace

std::optional<int> WorldModelSpec::VariableIndex(std::string_view name) const {
  for (int v = 0; v < static_cast<int>(variables.size()); ++v) {
    if (variables[v].name == name) return v;
  }
  return std::nullopt;
}

void ValidateSpec(const WorldModelSpec& spec) {
  std::set<std::string> seen;
  for (const auto& var : spec.variables) {
    if (var.name.empty()) throw SpecError("variable with an empty name");
    if (!seen.insert(var.name).second) {
      throw SpecError("variable '" + var.name + "' is declared twice");
    }
    if (var.bias < 0 || var.bias > 1) {
      throw SpecError("variable '" + var.name + "' has bias " +
                      FormatRational(var.bias) + " outside [0, 1]");
    }
    for (const auto& g : var.gate) {
      // Only names already inserted into `seen` precede this variable.
      if (g == var.name || !seen.contains(g)) {
        throw SpecError("variable '" + var.name + "' is gated on '" + g +
                        "', which is not declared before it");
      }
    }
  }
  if (!seen.contains(std::string(kCoordinationVariable))) {
    throw SpecError("spec must declare a variable named 'x'");
  }
  for (int r = 0; r < static_cast<int>(spec.observations.size()); ++r) {
    const auto& rule = spec.observations[r];
    const std::string where = "observation rule " + std::to_string(r);
    if (rule.player != 0 && rule.player != 1) {
      throw SpecError(where + " has player " + std::to_string(rule.player) +
                      "; must be 0 or 1");
    }
    for (const auto* list : {&rule.guard, &rule.observed}) {
      for (const auto& name : *list) {
        if (!seen.contains(name)) {
          throw SpecError(where + " references undeclared variable '" + name +
                          "'");
        }
      }
    }
  }
}

std::optional<int> StateSpace::Find(const Assignment& assignment) const {
  auto it = std::lower_bound(states.begin(), states.end(), assignment);
  if (it == states.end() || *it != assignment) return std::nullopt;
  return static_cast<int>(it - states.begin());
}

StateSpace EnumerateStates(const WorldModelSpec& spec) {
  ValidateSpec(spec);
  const int n = static_cast<int>(spec.variables.size());
  std::vector<std::vector<int>> gates;
  for (const auto& var : spec.variables) gates.push_back(ResolveNames(spec, var.gate));

  StateSpace space;
  Assignment current(n, 0);
  // Depth-first in declaration order; value 0 before 1 keeps the output
  // lexicographically sorted.
  auto recurse = [&](auto&& self, int v, Rational mass) -> void {
    if (mass == 0) return;
    if (v == n) {
      space.states.push_back(current);
      space.measure.push_back(mass);
      return;
    }
    const bool gated_off = std::any_of(gates[v].begin(), gates[v].end(),
                                       [&](int g) { return current[g] == 0; });
    if (gated_off) {
      current[v] = 0;
      self(self, v + 1, mass);
      return;
    }
    const Rational& bias = spec.variables[v].bias;
    current[v] = 0;
    self(self, v + 1, mass * (1 - bias));
    current[v] = 1;
    self(self, v + 1, mass * bias);
    current[v] = 0;
  };
  recurse(recurse, 0, Rational(1));
  return space;
}

ObservationTrace RunObservations(const WorldModelSpec& spec, Player player,
                                 const Assignment& state) {
  CheckPlayer(player);
  if (state.size() != spec.variables.size()) {
    throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                " values but the spec declares " +
                                std::to_string(spec.variables.size()) +
                                " variables");
  }
  ObservationTrace trace;
  for (int r = 0; r < static_cast<int>(spec.observations.size()); ++r) {
    const auto& rule = spec.observations[r];
    if (rule.player != player) continue;
    const bool fires = std::all_of(
        rule.guard.begin(), rule.guard.end(),
        [&](const std::string& g) { return state[*spec.VariableIndex(g)] == 1; });
    if (!fires) continue;
    std::vector<int> values;
    for (const auto& name : rule.observed) {
      values.push_back(state[*spec.VariableIndex(name)]);
    }
    trace.emplace_back(r, std::move(values));
  }
  return trace;
}

Partition BuildInformationPartition(const WorldModelSpec& spec,
                                    const StateSpace& space, Player player) {
  std::map<ObservationTrace, std::vector<int>> grouped;
  for (int s = 0; s < space.size(); ++s) {
    grouped[RunObservations(spec, player, space.states[s])].push_back(s);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [trace, members] : grouped) blocks.push_back(std::move(members));
  return Partition::FromBlocks(space.size(), std::move(blocks));
}

int WorldModel::StateIndex(const Assignment& assignment) const {
  if (assignment.size() != spec.variables.size()) {
    throw std::invalid_argument(
        "state " + FormatAssignment(assignment) + " has " +
        std::to_string(assignment.size()) + " values; the model has " +
        std::to_string(spec.variables.size()) + " variables");
  }
  auto index = space.Find(assignment);
  if (!index) {
    throw std::invalid_argument("state " + FormatAssignment(assignment) +
                                " has zero measure under the model");
  }
  return *index;
}

Event WorldModel::CoordinationEvent() const {
  const int x = *spec.VariableIndex(kCoordinationVariable);
  Event c(space.size());
  for (int s = 0; s < space.size(); ++s) {
    if (space.states[s][x] == 1) c.Insert(s);
  }
  return c;
}

WorldModel BuildWorldModel(WorldModelSpec spec) {
  StateSpace space = EnumerateStates(spec);
  std::array<Partition, kNumPlayers> partitions = {
      BuildInformationPartition(spec, space, 0),
      BuildInformationPartition(spec, space, 1)};
  InformationStructure structure(space.measure, std::move(partitions));
  return WorldModel{std::move(spec), std::move(space), std::move(structure)};
}

Event ParseEventPredicate(const WorldModel& model, std::string_view predicate) {
  std::vector<std::pair<int, int>> literals;
  std::string text(predicate);
  std::replace(text.begin(), text.end(), '&', ',');
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string literal = Trim(std::string_view(text).substr(start, end - start));
    start = end + 1;
    if (literal.empty()) {
      throw SpecError("empty conjunct in event predicate '" +
                      std::string(predicate) + "'");
    }
    const auto eq = literal.find('=');
    if (eq == std::string::npos) {
      throw SpecError("event conjunct '" + literal + "' is not of the form var=0|1");
    }
    const std::string name = Trim(std::string_view(literal).substr(0, eq));
    const std::string value = Trim(std::string_view(literal).substr(eq + 1));
    auto index = model.spec.VariableIndex(name);
    if (!index) throw SpecError("event references unknown variable '" + name + "'");
    if (value != "0" && value != "1") {
      throw SpecError("event conjunct '" + literal + "' must compare to 0 or 1");
    }
    literals.emplace_back(*index, value == "1" ? 1 : 0);
  }
  Event event(model.space.size());
  for (int s = 0; s < model.space.size(); ++s) {
    const auto& st = model.space.states[s];
    if (std::all_of(literals.begin(), literals.end(),
                    [&](const auto& lit) { return st[lit.first] == lit.second; })) {
      event.Insert(s);
    }
  }
  return event;
}

Assignment ParseAssignment(std::string_view text) {
  std::string body = Trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  Assignment out;
  size_t start = 0;
  while (start <= body.size()) {
    size_t end = body.find(',', start);
    if (end == std::string::npos) end = body.size();
    const std::string bit = Trim(std::string_view(body).substr(start, end - start));
    if (bit != "0" && bit != "1") {
      throw ParseError("state tuple entries must be 0 or 1: '" + std::string(text) + "'");
    }
    out.push_back(bit == "1");
    start = end + 1;
  }
  return out;
}

std::string FormatAssignment(const Assignment& assignment) {
  std::string out = "(";
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(assignment[i]);
  }
  return out + ")";
}

WorldModelSpec BuiltinMessenger(const Rational& delta) {
  ValidateBias(delta, "delta");
  const Rational half(1, 2);
  WorldModelSpec spec;
  spec.variables = {
      {"x", delta, {}},
      {"visit_0", half, {}},
      {"visit_1", half, {}},
      {"tell_plan_0", half, {"visit_0"}},
      {"tell_plan_1", half, {"visit_1"}},
  };
  spec.observations = {
      {{"visit_0"}, 0, {"x"}},
      {{"visit_0", "tell_plan_0"}, 0, {"visit_1", "tell_plan_1"}},
      {{"visit_1"}, 1, {"x", "visit_0"}},
      {{"visit_1", "tell_plan_1"}, 1, {"tell_plan_0"}},
  };
  return spec;
}

WorldModelSpec BuiltinLoudspeaker(const Rational& delta) {
  ValidateBias(delta, "delta");
  WorldModelSpec spec;
  spec.variables = {
      {"x", delta, {}},
      {"broadcast", Rational(1, 2), {}},
  };
  spec.observations = {
      {{"broadcast"}, 0, {"x"}},
      {{"broadcast"}, 1, {"x"}},
  };
  return spec;
}

}  // namespace epicoord
