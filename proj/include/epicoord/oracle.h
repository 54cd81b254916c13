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

#ifndef EPICOORD_ORACLE_H_
#define EPICOORD_ORACLE_H_

// Brute-force reference answers for small information structures, and a
// seeded generator of random structures to run them on. Nothing here calls
// into epistemic.h; beliefs are recomputed from the measure and partitions.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "epicoord/information_structure.h"
#include "epicoord/rational.h"

namespace epicoord::oracle {

inline constexpr int kDefaultMaxStates = 12;
// Subsets are bitmasks; beyond this even a single query is impractical.
inline constexpr int kHardMaxStates = 20;

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evidence level of every nonempty event, indexed by membership bitmask
// (bit k set iff state k is in the event). Entry 0 is unused.
std::vector<Rational> EvidenceLevelsByMask(const InformationStructure& s,
                                           const Event& target,
                                           int max_states = kDefaultMaxStates);

// Maximum over all nonempty events E of min(level(E), P_i(E | state)):
// each E witnesses common p-belief up to its own level, believed with
// probability P_i(E | state). Exhaustive over all 2^n events.
Rational BruteForceCommonPBelief(const InformationStructure& s,
                                 const Event& target, Player i, int state,
                                 int max_states = kDefaultMaxStates);

// Every value mu(S) / mu(B) for a block B of either player and S a subset
// of B, plus 0 and 1; ascending and duplicate-free. Any conditional belief
// in the structure is one of these.
// [player][state] table of BruteForceCommonPBelief, sharing one enumeration.
std::array<std::vector<Rational>, kNumPlayers> BruteForceCommonPBeliefTable(
    const InformationStructure& s, const Event& target,
    int max_states = kDefaultMaxStates);

std::vector<Rational> RealizableBeliefs(const InformationStructure& s,
                                        int max_states = kDefaultMaxStates);

// The largest p-evident target-indicating event, by deleting states whose
// belief in the event or the target is below p until none remain.
Event LargestEvidentEvent(const InformationStructure& s, const Event& target,
                          const Rational& p);

// The largest p-evident target-indicating event as the union of every
// event whose evidence level is at least p.
Event LargestEvidentEventByEnumeration(const InformationStructure& s,
                                       const Event& target, const Rational& p,
                                       int max_states = kDefaultMaxStates);

// Largest realizable p with P_i(LargestEvidentEvent(p) | state) >= p.
Rational CandidateFixpointCommonPBelief(const InformationStructure& s,
                                        const Event& target, Player i,
                                        int state,
                                        int max_states = kDefaultMaxStates);

enum class MeasureStyle { kUniform, kRandom };

struct RandomStructureConfig {
  std::uint64_t seed = 0;
  int num_states = 8;
  MeasureStyle measure = MeasureStyle::kRandom;
};

struct RandomInstance {
  InformationStructure structure;
  Event target;
};

// Deterministic in the config. Measures are positive (random weights in
// 1..10 when kRandom), each player's partition assigns states to a random
// number of blocks, and the target is a random nonempty event.
RandomInstance RandomStructure(const RandomStructureConfig& config);

}  // namespace epicoord::oracle

#endif  // EPICOORD_ORACLE_H_
