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

#ifndef EPICOORD_EPISTEMIC_H_
#define EPICOORD_EPISTEMIC_H_

#include <vector>

#include "epicoord/information_structure.h"
#include "epicoord/rational.h"

namespace epicoord {

// P_i(E | w) = mu(E n Pi_i(w)) / mu(Pi_i(w)).
Rational ConditionalBelief(const InformationStructure& s, Player i,
                           const Event& event, int state);

// min over both players of min(P_i(E | w), P_i(C | w)).
Rational MinBelief(const InformationStructure& s, const Event& event,
                   const Event& target, int state);

// The C-evidence level of a nonempty event E: the largest p for which E is
// p-evident and every player p-believes C at every state of E. Throws
// std::invalid_argument for the empty event, where the level is undefined.
Rational EvidenceLevel(const InformationStructure& s, const Event& event,
                       const Event& target);

// Removes states whose MinBelief against the current event is <= p until
// none remain. Every remaining state has both beliefs strictly above p.
//
// When `event` is a maximally evident C-indicating event and `p` is its
// evidence level, the result is the largest super-p-evident C-indicating
// subset of `event` (empty if there is none). Beliefs only shrink as the
// event shrinks, so removing every violator of a pass at once reaches the
// same fixpoint as removing them one at a time.
Event SuperPEvident(const InformationStructure& s, const Event& event,
                    const Event& target, const Rational& p);

// The largest p such that player i p-believes at `state` that there is
// common p-belief in `target`. Walks the nested sequence of maximally
// evident target-indicating events from the full space inward and stops at
// the first one the player considers impossible; the answer is the evidence
// level of the last event still consistent with Pi_i(state). Depends on
// `state` only through Pi_i(state).
Rational CommonPBelief(const InformationStructure& s, const Event& target,
                       Player i, int state);

struct EvidentRung {
  Event event;
  Rational level;
};

// The nested maximally evident target-indicating events E_1 > E_2 > ... with
// their evidence levels. rungs[0] is the full space; events strictly shrink
// and levels strictly increase. Independent of player and state.
struct EvidentLadder {
  std::vector<EvidentRung> rungs;

  // Same value as CommonPBelief(s, target, i, state) for the ladder's
  // target, without re-walking the removals.
  Rational CommonPBeliefAt(const InformationStructure& s, Player i,
                           int state) const;
};

EvidentLadder BuildEvidentLadder(const InformationStructure& s,
                                 const Event& target);

// Every player p-believes `event` at every state of `event`.
bool IsPEvident(const InformationStructure& s, const Event& event,
                const Rational& p);
// Every player p-believes `target` at every state of `event`.
bool IsCIndicating(const InformationStructure& s, const Event& event,
                   const Event& target, const Rational& p);

}  // namespace epicoord

#endif  // EPICOORD_EPISTEMIC_H_
