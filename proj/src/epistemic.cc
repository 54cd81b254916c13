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

#include "epicoord/epistemic.h"

#include <stdexcept>
#include <string>

namespace epicoord {
namespace {

void CheckState(const InformationStructure& s, int state) {
  if (state < 0 || state >= s.num_states()) {
    throw std::out_of_range("state index " + std::to_string(state) +
                            " outside [0, " + std::to_string(s.num_states()) +
                            ")");
  }
}

void CheckEvent(const InformationStructure& s, const Event& event) {
  if (event.universe_size() != s.num_states()) {
    throw std::invalid_argument("event is over a different state space");
  }
}

}  // namespace

Rational ConditionalBelief(const InformationStructure& s, Player i,
                           const Event& event, int state) {
  CheckPlayer(i);
  CheckState(s, state);
  CheckEvent(s, event);
  Rational mass = 0;
  for (int member : s.partition(i).BlockContaining(state)) {
    if (event.Contains(member)) mass += s.measure(member);
  }
  return mass / s.BlockMeasure(i, state);
}

Rational MinBelief(const InformationStructure& s, const Event& event,
                   const Event& target, int state) {
  Rational lowest = 1;
  for (Player i = 0; i < kNumPlayers; ++i) {
    Rational b = ConditionalBelief(s, i, event, state);
    if (b < lowest) lowest = b;
    b = ConditionalBelief(s, i, target, state);
    if (b < lowest) lowest = b;
  }
  return lowest;
}

Rational EvidenceLevel(const InformationStructure& s, const Event& event,
                       const Event& target) {
  CheckEvent(s, event);
  if (event.empty()) {
    throw std::invalid_argument("evidence level of the empty event is undefined");
  }
  Rational lowest = 1;
  for (int state : event.Members()) {
    Rational b = MinBelief(s, event, target, state);
    if (b < lowest) lowest = b;
  }
  return lowest;
}

Event SuperPEvident(const InformationStructure& s, const Event& event,
                    const Event& target, const Rational& p) {
  Event current = event;
  for (;;) {
    std::vector<int> violators;
    for (int state : current.Members()) {
      if (MinBelief(s, current, target, state) <= p) violators.push_back(state);
    }
    if (violators.empty()) return current;
    for (int state : violators) current.Erase(state);
  }
}

Rational CommonPBelief(const InformationStructure& s, const Event& target,
                       Player i, int state) {
  CheckPlayer(i);
  CheckState(s, state);
  CheckEvent(s, target);
  Event candidate = Event::Full(s.num_states());
  Rational level = EvidenceLevel(s, candidate, target);
  // P_i(candidate | state) is 1 on entry, so the loop body runs at least
  // once and `level` always belongs to the last consistent event.
  Event next = candidate;
  while (ConditionalBelief(s, i, next, state) > 0) {
    level = EvidenceLevel(s, next, target);
    candidate = next;
    next = SuperPEvident(s, candidate, target, level);
  }
  return level;
}

EvidentLadder BuildEvidentLadder(const InformationStructure& s,
                                 const Event& target) {
  CheckEvent(s, target);
  EvidentLadder ladder;
  Event current = Event::Full(s.num_states());
  while (!current.empty()) {
    Rational level = EvidenceLevel(s, current, target);
    Event next = SuperPEvident(s, current, target, level);
    // The state attaining the level is always removed, so rungs never repeat.
    ladder.rungs.push_back({std::move(current), std::move(level)});
    current = std::move(next);
  }
  return ladder;
}

Rational EvidentLadder::CommonPBeliefAt(const InformationStructure& s,
                                        Player i, int state) const {
  CheckPlayer(i);
  CheckState(s, state);
  if (rungs.empty()) throw std::logic_error("empty evident ladder");
  const auto& block = s.partition(i).BlockContaining(state);
  const Rational* level = &rungs.front().level;
  for (const auto& rung : rungs) {
    bool touches = false;
    for (int member : block) {
      if (rung.event.Contains(member)) {
        touches = true;
        break;
      }
    }
    if (!touches) break;
    level = &rung.level;
  }
  return *level;
}

bool IsPEvident(const InformationStructure& s, const Event& event,
                const Rational& p) {
  CheckEvent(s, event);
  for (int state : event.Members()) {
    for (Player i = 0; i < kNumPlayers; ++i) {
      if (ConditionalBelief(s, i, event, state) < p) return false;
    }
  }
  return true;
}

bool IsCIndicating(const InformationStructure& s, const Event& event,
                   const Event& target, const Rational& p) {
  CheckEvent(s, event);
  for (int state : event.Members()) {
    for (Player i = 0; i < kNumPlayers; ++i) {
      if (ConditionalBelief(s, i, target, state) < p) return false;
    }
  }
  return true;
}

}  // namespace epicoord
