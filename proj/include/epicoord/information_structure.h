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

#ifndef EPICOORD_INFORMATION_STRUCTURE_H_
#define EPICOORD_INFORMATION_STRUCTURE_H_

#include <array>
#include <span>
#include <vector>

#include "epicoord/rational.h"

namespace epicoord {

// Players are 0 and 1.
using Player = int;
inline constexpr int kNumPlayers = 2;
inline constexpr Player Other(Player p) { return 1 - p; }
void CheckPlayer(Player p);

// A set of state indices over a fixed universe [0, universe_size).
class Event {
 public:
  Event() = default;
  explicit Event(int universe_size);

  static Event Full(int universe_size);
  static Event FromMembers(int universe_size, std::span<const int> members);

  int universe_size() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool Contains(int state) const;
  void Insert(int state);
  void Erase(int state);

  // Ascending.
  std::vector<int> Members() const;

  bool IsSubsetOf(const Event& other) const;
  Event Union(const Event& other) const;
  Event Intersection(const Event& other) const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.bits_ == b.bits_;
  }

 private:
  void CheckIndex(int state) const;
  void CheckSameUniverse(const Event& other) const;

  std::vector<char> bits_;
  int count_ = 0;
};

// A partition of [0, num_states) into nonempty blocks. Blocks are kept in
// canonical form: members ascending, blocks ordered by their least member.
class Partition {
 public:
  Partition() = default;

  // Throws std::invalid_argument unless the blocks are disjoint, nonempty
  // and cover [0, num_states).
  static Partition FromBlocks(int num_states,
                              std::vector<std::vector<int>> blocks);
  // States sharing a label share a block. Labels are arbitrary ints.
  static Partition FromLabels(std::span<const int> labels);

  int num_states() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int BlockOf(int state) const { return block_of_.at(state); }
  const std::vector<int>& BlockContaining(int state) const {
    return blocks_[BlockOf(state)];
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// (Omega, mu, (Pi_0, Pi_1)): a finite state space with a strictly positive
// measure summing to one and one information partition per player.
class InformationStructure {
 public:
  InformationStructure() = default;
  // Throws std::invalid_argument when the measure is not strictly positive,
  // does not sum to exactly 1, or a partition has the wrong size.
  InformationStructure(std::vector<Rational> measure,
                       std::array<Partition, kNumPlayers> partitions);

  int num_states() const { return static_cast<int>(measure_.size()); }
  const Rational& measure(int state) const { return measure_.at(state); }
  const std::vector<Rational>& measures() const { return measure_; }
  const Partition& partition(Player p) const;

  Rational Measure(const Event& event) const;
  // mu(Pi_p(state)).
  const Rational& BlockMeasure(Player p, int state) const;

 private:
  std::vector<Rational> measure_;
  std::array<Partition, kNumPlayers> partitions_;
  // Indexed by [player][block id].
  std::array<std::vector<Rational>, kNumPlayers> block_measure_;
};

}  // namespace epicoord

#endif  // EPICOORD_INFORMATION_STRUCTURE_H_
