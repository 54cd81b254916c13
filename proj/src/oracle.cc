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

#include "epicoord/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <string>

namespace epicoord::oracle {
namespace {

using Mask = std::uint32_t;

void CheckSize(const InformationStructure& s, int max_states) {
  const int limit = std::min(max_states, kHardMaxStates);
  if (s.num_states() > limit) {
    throw OracleSizeError("oracle limited to " + std::to_string(limit) +
                          " states, structure has " +
                          std::to_string(s.num_states()));
  }
}

// Per-player block tables over bitmasks.
struct Blocks {
  // [player] -> list of block masks.
  std::array<std::vector<Mask>, kNumPlayers> masks;
  std::array<std::vector<Rational>, kNumPlayers> mass;
  std::array<std::vector<Rational>, kNumPlayers> target_belief;
  // [player][state] -> block id.
  std::array<std::vector<int>, kNumPlayers> block_of;
  // mu of every subset, indexed by mask.
  std::vector<Rational> subset_mass;

  const Rational& MassOf(Mask m) const { return subset_mass[m]; }
};

Blocks MakeBlocks(const InformationStructure& s, const Event& target) {
  Blocks b;
  const int n = s.num_states();
  b.subset_mass.resize(std::size_t{1} << n);
  for (Mask m = 1; m < b.subset_mass.size(); ++m) {
    const int low = std::countr_zero(m);
    b.subset_mass[m] = b.subset_mass[m & (m - 1)] + s.measure(low);
  }
  Mask target_mask = 0;
  for (int k : target.Members()) target_mask |= Mask{1} << k;
  for (Player i = 0; i < kNumPlayers; ++i) {
    b.block_of[i].assign(s.num_states(), -1);
    for (const auto& block : s.partition(i).blocks()) {
      Mask m = 0;
      for (int k : block) {
        m |= Mask{1} << k;
        b.block_of[i][k] = static_cast<int>(b.masks[i].size());
      }
      b.masks[i].push_back(m);
      b.mass[i].push_back(b.MassOf(m));
      b.target_belief[i].push_back(b.MassOf(m & target_mask) / b.mass[i].back());
    }
  }
  return b;
}

Event MaskToEvent(Mask m, int n) {
  Event e(n);
  for (int k = 0; k < n; ++k) {
    if (m >> k & 1u) e.Insert(k);
  }
  return e;
}

// Belief of player i in the event with mask `e` at any state of block `b`.
Rational BlockBelief(const Blocks& blocks, Player i, int b, Mask e) {
  return blocks.MassOf(e & blocks.masks[i][b]) / blocks.mass[i][b];
}

std::vector<Rational> LevelsFromBlocks(const Blocks& blocks, int n) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Rational> levels(static_cast<size_t>(full) + 1);
  for (Mask e = 1; e <= full; ++e) {
    Rational level = 1;
    for (Player i = 0; i < kNumPlayers; ++i) {
      for (size_t b = 0; b < blocks.masks[i].size(); ++b) {
        // Only blocks meeting E contain states of E.
        if (!(blocks.masks[i][b] & e)) continue;
        if (blocks.target_belief[i][b] < level) level = blocks.target_belief[i][b];
        Rational belief = BlockBelief(blocks, i, static_cast<int>(b), e);
        if (belief < level) level = belief;
      }
    }
    levels[e] = level;
  }
  return levels;
}

}  // namespace

std::vector<Rational> EvidenceLevelsByMask(const InformationStructure& s,
                                           const Event& target,
                                           int max_states) {
  CheckSize(s, max_states);
  return LevelsFromBlocks(MakeBlocks(s, target), s.num_states());
}

std::array<std::vector<Rational>, kNumPlayers> BruteForceCommonPBeliefTable(
    const InformationStructure& s, const Event& target, int max_states) {
  CheckSize(s, max_states);
  const Blocks blocks = MakeBlocks(s, target);
  const std::vector<Rational> levels = LevelsFromBlocks(blocks, s.num_states());
  std::array<std::vector<Rational>, kNumPlayers> table;
  for (Player i = 0; i < kNumPlayers; ++i) {
    // The value depends on the state only through its block.
    std::vector<Rational> by_block(blocks.masks[i].size(), Rational(0));
    for (size_t b = 0; b < by_block.size(); ++b) {
      const Mask own = blocks.masks[i][b];
      for (Mask e = 1; e < levels.size(); ++e) {
        if (!(own & e) || levels[e] <= by_block[b]) continue;
        const Rational believed = BlockBelief(blocks, i, static_cast<int>(b), e);
        const Rational& witnessed = std::min(levels[e], believed);
        if (witnessed > by_block[b]) by_block[b] = witnessed;
      }
    }
    table[i].resize(s.num_states());
    for (int w = 0; w < s.num_states(); ++w) table[i][w] = by_block[blocks.block_of[i][w]];
  }
  return table;
}

Rational BruteForceCommonPBelief(const InformationStructure& s,
                                 const Event& target, Player i, int state,
                                 int max_states) {
  CheckPlayer(i);
  if (state < 0 || state >= s.num_states()) {
    throw std::out_of_range("state index " + std::to_string(state) + " out of range");
  }
  return BruteForceCommonPBeliefTable(s, target, max_states)[i][state];
}

std::vector<Rational> RealizableBeliefs(const InformationStructure& s,
                                        int max_states) {
  CheckSize(s, max_states);
  std::vector<Rational> values = {Rational(0), Rational(1)};
  for (Player i = 0; i < kNumPlayers; ++i) {
    for (const auto& block : s.partition(i).blocks()) {
      Rational block_mass = 0;
      for (int k : block) block_mass += s.measure(k);
      const Mask subsets = Mask{1} << block.size();
      for (Mask m = 1; m < subsets; ++m) {
        Rational mass = 0;
        for (size_t j = 0; j < block.size(); ++j) {
          if (m >> j & 1u) mass += s.measure(block[j]);
        }
        values.push_back(mass / block_mass);
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Event LargestEvidentEvent(const InformationStructure& s, const Event& target,
                          const Rational& p) {
  const int n = s.num_states();
  std::vector<char> in(n, 1);
  auto belief = [&](Player i, int state, auto&& member) {
    Rational mass = 0;
    Rational total = 0;
    for (int k : s.partition(i).BlockContaining(state)) {
      total += s.measure(k);
      if (member(k)) mass += s.measure(k);
    }
    return Rational(mass / total);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < n; ++w) {
      if (!in[w]) continue;
      for (Player i = 0; i < kNumPlayers; ++i) {
        if (belief(i, w, [&](int k) { return in[k] != 0; }) < p ||
            belief(i, w, [&](int k) { return target.Contains(k); }) < p) {
          in[w] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  Event out(n);
  for (int w = 0; w < n; ++w) {
    if (in[w]) out.Insert(w);
  }
  return out;
}

Event LargestEvidentEventByEnumeration(const InformationStructure& s,
                                       const Event& target, const Rational& p,
                                       int max_states) {
  const std::vector<Rational> levels = EvidenceLevelsByMask(s, target, max_states);
  Mask all = 0;
  for (Mask e = 1; e < levels.size(); ++e) {
    if (levels[e] >= p) all |= e;
  }
  return MaskToEvent(all, s.num_states());
}

Rational CandidateFixpointCommonPBelief(const InformationStructure& s,
                                        const Event& target, Player i,
                                        int state, int max_states) {
  CheckPlayer(i);
  std::vector<Rational> candidates = RealizableBeliefs(s, max_states);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Event largest = LargestEvidentEvent(s, target, *it);
    if (largest.empty()) continue;
    Rational mass = 0;
    Rational total = 0;
    for (int k : s.partition(i).BlockContaining(state)) {
      total += s.measure(k);
      if (largest.Contains(k)) mass += s.measure(k);
    }
    if (mass / total >= *it) return *it;
  }
  return 0;
}

RandomInstance RandomStructure(const RandomStructureConfig& config) {
  const int n = config.num_states;
  if (n < 1 || n > kHardMaxStates) {
    throw std::invalid_argument("num_states must lie in [1, " +
                                std::to_string(kHardMaxStates) + "]");
  }
  // Plain modulo of the engine output keeps the stream identical across
  // standard libraries, unlike the <random> distributions.
  std::mt19937_64 rng(config.seed);
  auto uniform = [&](int bound) { return static_cast<int>(rng() % bound); };

  std::vector<Rational> measure(n);
  if (config.measure == MeasureStyle::kUniform) {
    for (auto& m : measure) m = Rational(1, n);
  } else {
    std::vector<int> weights(n);
    int total = 0;
    for (auto& w : weights) total += (w = 1 + uniform(10));
    for (int k = 0; k < n; ++k) {
      measure[k] = Rational(weights[k], total);
      measure[k].canonicalize();
    }
  }

  std::array<Partition, kNumPlayers> partitions;
  for (Player i = 0; i < kNumPlayers; ++i) {
    const int num_labels = 1 + uniform(n);
    std::vector<int> labels(n);
    for (auto& l : labels) l = uniform(num_labels);
    partitions[i] = Partition::FromLabels(labels);
  }

  Event target(n);
  for (int k = 0; k < n; ++k) {
    if (uniform(2)) target.Insert(k);
  }
  if (target.empty()) target.Insert(uniform(n));

  return {InformationStructure(std::move(measure), std::move(partitions)),
          std::move(target)};
}

}  // namespace epicoord::oracle
