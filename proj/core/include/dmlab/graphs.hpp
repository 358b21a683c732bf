// Copyright 2026 The dmlab Authors
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

// Distance magic checks on complete multipartite graphs and on the clique
// blow-up of a cycle.
//
// Graphs are never stored as edge lists. A vertex is identified with its
// label in [n]; the structure is the map label -> part. In K_{p_1..p_k} the
// open neighborhood of x is everything outside x's part, so its label sum is
// n(n+1)/2 - S(part of x). An explicit neighbor walk is kept as a second
// route and runs only for n <= kExplicitCheckLimit.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dmlab/partition.hpp"

namespace dmlab {

inline constexpr Label kExplicitCheckLimit = 200;

class LabeledMultipartite {
 public:
  // part_of[x - 1] is the part of vertex x. Throws InvalidInputError unless
  // every part index is < sizes.size() and part i holds exactly sizes[i]
  // vertices.
  LabeledMultipartite(std::vector<Label> sizes, std::vector<std::uint32_t> part_of);

  Label n() const { return static_cast<Label>(part_of_.size()); }
  std::size_t k() const { return sizes_.size(); }
  const std::vector<Label>& sizes() const { return sizes_; }
  std::size_t part_of(Label x) const { return part_of_[static_cast<std::size_t>(x - 1)]; }
  std::vector<std::vector<Label>> parts() const;
  std::vector<Label> part_sums() const;

 private:
  std::vector<Label> sizes_;
  std::vector<std::uint32_t> part_of_;
};

// Part i carries the labels of block i.
LabeledMultipartite labeling_from_partition(const Partition& p);
Partition partition_from_labeling(const LabeledMultipartite& g);

struct MagicWitness {
  Label u = 0;
  Label v = 0;
  Label sum_u = 0;
  Label sum_v = 0;
};

struct MagicCheck {
  bool is_magic = false;
  std::optional<Label> constant;
  std::optional<MagicWitness> witness;  // present iff !is_magic
  // Closed check on a 3-cycle: every closed neighborhood is the whole
  // vertex set, so the condition holds for any labeling.
  bool degenerate = false;
  // Both the structural and the explicit neighbor-walk routes ran and agreed.
  bool cross_checked = false;
};

// Open neighborhood label sums, indexed by label - 1.
std::vector<Label> neighbor_sums_by_complement(const LabeledMultipartite& g);
std::vector<Label> neighbor_sums_by_iteration(const LabeledMultipartite& g);

// Throws std::logic_error if the two routes ever disagree.
MagicCheck verify_distance_magic(const LabeledMultipartite& g);

// Same check read straight off the partition (part i = block i) without
// materializing per-vertex arrays; meant for very large n.
MagicCheck verify_distance_magic(const Partition& p);

// Closed neighborhood sums on the C_k blow-up with clique i = block i.
std::vector<Label> closed_cycle_sums_by_blocks(const Partition& p);
std::vector<Label> closed_cycle_sums_by_iteration(const Partition& p);

// Throws PreconditionError when p has fewer than 3 blocks.
MagicCheck verify_closed_magic_cycle(const Partition& p);

}  // namespace dmlab
