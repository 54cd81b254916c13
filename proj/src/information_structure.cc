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

#include "epicoord/information_structure.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace epicoord {

void CheckPlayer(Player p) {
  if (p != 0 && p != 1) {
    throw std::out_of_range("player must be 0 or 1, got " + std::to_string(p));
  }
}

Event::Event(int universe_size) {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
  bits_.assign(universe_size, 0);
}

Event Event::Full(int universe_size) {
  Event e(universe_size);
  std::fill(e.bits_.begin(), e.bits_.end(), 1);
  e.count_ = universe_size;
  return e;
}

Event Event::FromMembers(int universe_size, std::span<const int> members) {
  Event e(universe_size);
  for (int m : members) e.Insert(m);
  return e;
}

void Event::CheckIndex(int state) const {
  if (state < 0 || state >= universe_size()) {
    throw std::out_of_range("state index " + std::to_string(state) +
                            " outside [0, " + std::to_string(universe_size()) +
                            ")");
  }
}

void Event::CheckSameUniverse(const Event& other) const {
  if (other.universe_size() != universe_size()) {
    throw std::invalid_argument("events over different state spaces");
  }
}

bool Event::Contains(int state) const {
  CheckIndex(state);
  return bits_[state] != 0;
}

void Event::Insert(int state) {
  CheckIndex(state);
  if (!bits_[state]) {
    bits_[state] = 1;
    ++count_;
  }
}

void Event::Erase(int state) {
  CheckIndex(state);
  if (bits_[state]) {
    bits_[state] = 0;
    --count_;
  }
}

std::vector<int> Event::Members() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int s = 0; s < universe_size(); ++s) {
    if (bits_[s]) out.push_back(s);
  }
  return out;
}

bool Event::IsSubsetOf(const Event& other) const {
  CheckSameUniverse(other);
  for (int s = 0; s < universe_size(); ++s) {
    if (bits_[s] && !other.bits_[s]) return false;
  }
  return true;
}

Event Event::Union(const Event& other) const {
  CheckSameUniverse(other);
  Event out(universe_size());
  for (int s = 0; s < universe_size(); ++s) {
    if (bits_[s] || other.bits_[s]) out.Insert(s);
  }
  return out;
}

Event Event::Intersection(const Event& other) const {
  CheckSameUniverse(other);
  Event out(universe_size());
  for (int s = 0; s < universe_size(); ++s) {
    if (bits_[s] && other.bits_[s]) out.Insert(s);
  }
  return out;
}

Partition Partition::FromBlocks(int num_states,
                                std::vector<std::vector<int>> blocks) {
  Partition p;
  p.block_of_.assign(num_states, -1);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int s : blocks[b]) {
      if (s < 0 || s >= num_states) {
        throw std::invalid_argument("partition block references state " +
                                    std::to_string(s) + " outside the space");
      }
      if (p.block_of_[s] != -1) {
        throw std::invalid_argument("state " + std::to_string(s) +
                                    " appears in two partition blocks");
      }
      p.block_of_[s] = b;
    }
  }
  for (int s = 0; s < num_states; ++s) {
    if (p.block_of_[s] == -1) {
      throw std::invalid_argument("state " + std::to_string(s) +
                                  " is not covered by the partition");
    }
  }
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::FromLabels(std::span<const int> labels) {
  std::map<int, std::vector<int>> grouped;
  for (int s = 0; s < static_cast<int>(labels.size()); ++s) {
    grouped[labels[s]].push_back(s);
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(grouped.size());
  for (auto& [label, members] : grouped) blocks.push_back(std::move(members));
  return FromBlocks(static_cast<int>(labels.size()), std::move(blocks));
}

InformationStructure::InformationStructure(
    std::vector<Rational> measure,
    std::array<Partition, kNumPlayers> partitions)
    : measure_(std::move(measure)), partitions_(std::move(partitions)) {
  if (measure_.empty()) throw std::invalid_argument("empty state space");
  Rational total = 0;
  for (const auto& m : measure_) {
    if (m <= 0) throw std::invalid_argument("state measures must be positive");
    total += m;
  }
  if (total != 1) {
    throw std::invalid_argument("state measures sum to " +
                                FormatRational(total) + ", not 1");
  }
  for (Player p = 0; p < kNumPlayers; ++p) {
    if (partitions_[p].num_states() != num_states()) {
      throw std::invalid_argument("partition of player " + std::to_string(p) +
                                  " does not cover the state space");
    }
    auto& sums = block_measure_[p];
    sums.assign(partitions_[p].num_blocks(), Rational(0));
    for (int s = 0; s < num_states(); ++s) {
      sums[partitions_[p].BlockOf(s)] += measure_[s];
    }
  }
}

const Partition& InformationStructure::partition(Player p) const {
  CheckPlayer(p);
  return partitions_[p];
}

Rational InformationStructure::Measure(const Event& event) const {
  if (event.universe_size() != num_states()) {
    throw std::invalid_argument("event is over a different state space");
  }
  Rational total = 0;
  for (int s : event.Members()) total += measure_[s];
  return total;
}

const Rational& InformationStructure::BlockMeasure(Player p, int state) const {
  CheckPlayer(p);
  return block_measure_[p][partitions_[p].BlockOf(state)];
}

}  // namespace epicoord
