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

#include "dmlab/graphs.hpp"

#include <stdexcept>

#include "dmlab/errors.hpp"

namespace dmlab {

namespace {

MagicCheck summarize(const std::vector<Label>& sums) {
  MagicCheck check;
  for (std::size_t i = 1; i < sums.size(); ++i) {
    if (sums[i] != sums[0]) {
      check.witness = MagicWitness{1, static_cast<Label>(i + 1), sums[0], sums[i]};
      return check;
    }
  }
  check.is_magic = true;
  check.constant = sums.at(0);
  return check;
}

void cross_check(const std::vector<Label>& fast, const std::vector<Label>& slow,
                 const char* what) {
  if (fast != slow) {
    throw std::logic_error(std::string(what) + ": neighbor-sum routes disagree");
  }
}

}  // namespace

LabeledMultipartite::LabeledMultipartite(std::vector<Label> sizes,
                                         std::vector<std::uint32_t> part_of)
    : sizes_(std::move(sizes)), part_of_(std::move(part_of)) {
  if (sizes_.empty() || part_of_.empty()) {
    throw InvalidInputError("labeling needs at least one part and one vertex");
  }
  std::vector<Label> counts(sizes_.size(), 0);
  for (std::uint32_t part : part_of_) {
    if (part >= sizes_.size()) {
      throw InvalidInputError("part index " + std::to_string(part) + " out of range");
    }
    ++counts[part];
  }
  if (counts != sizes_) {
    throw InvalidInputError("labeling does not match the part sizes");
  }
}

std::vector<std::vector<Label>> LabeledMultipartite::parts() const {
  std::vector<std::vector<Label>> out(sizes_.size());
  for (Label x = 1; x <= n(); ++x) out[part_of(x)].push_back(x);
  return out;
}

std::vector<Label> LabeledMultipartite::part_sums() const {
  std::vector<Label> sums(sizes_.size(), 0);
  for (Label x = 1; x <= n(); ++x) sums[part_of(x)] += x;
  return sums;
}

LabeledMultipartite labeling_from_partition(const Partition& p) {
  std::vector<std::uint32_t> part_of(static_cast<std::size_t>(p.n()));
  for (Label x = 1; x <= p.n(); ++x) {
    part_of[static_cast<std::size_t>(x - 1)] = static_cast<std::uint32_t>(p.block_of(x));
  }
  return LabeledMultipartite(p.block_sizes(), std::move(part_of));
}

Partition partition_from_labeling(const LabeledMultipartite& g) {
  return Partition::from_blocks(g.n(), g.parts());
}

std::vector<Label> neighbor_sums_by_complement(const LabeledMultipartite& g) {
  const Label total = total_sum(g.n());
  const auto part_sums = g.part_sums();
  std::vector<Label> sums(static_cast<std::size_t>(g.n()));
  for (Label x = 1; x <= g.n(); ++x) {
    sums[static_cast<std::size_t>(x - 1)] = total - part_sums[g.part_of(x)];
  }
  return sums;
}

std::vector<Label> neighbor_sums_by_iteration(const LabeledMultipartite& g) {
  std::vector<Label> sums(static_cast<std::size_t>(g.n()), 0);
  for (Label x = 1; x <= g.n(); ++x) {
    for (Label y = 1; y <= g.n(); ++y) {
      if (g.part_of(y) != g.part_of(x)) sums[static_cast<std::size_t>(x - 1)] += y;
    }
  }
  return sums;
}

MagicCheck verify_distance_magic(const LabeledMultipartite& g) {
  const auto sums = neighbor_sums_by_complement(g);
  bool cross_checked = false;
  if (g.n() <= kExplicitCheckLimit) {
    cross_check(sums, neighbor_sums_by_iteration(g), "distance magic");
    cross_checked = true;
  }
  MagicCheck check = summarize(sums);
  check.cross_checked = cross_checked;
  return check;
}

MagicCheck verify_distance_magic(const Partition& p) {
  if (p.n() <= kExplicitCheckLimit) return verify_distance_magic(labeling_from_partition(p));
  const Label total = total_sum(p.n());
  const Label first = total - p.sum(p.block_of(1));
  MagicCheck check;
  for (Label x = 2; x <= p.n(); ++x) {
    const Label sum = total - p.sum(p.block_of(x));
    if (sum != first) {
      check.witness = MagicWitness{1, x, first, sum};
      return check;
    }
  }
  check.is_magic = true;
  check.constant = first;
  return check;
}

std::vector<Label> closed_cycle_sums_by_blocks(const Partition& p) {
  const std::size_t k = p.k();
  if (k < 3) throw PreconditionError("the cycle blow-up needs at least 3 blocks");
  std::vector<Label> sums(static_cast<std::size_t>(p.n()));
  for (Label x = 1; x <= p.n(); ++x) {
    const std::size_t i = p.block_of(x);
    sums[static_cast<std::size_t>(x - 1)] =
        p.sum((i + k - 1) % k) + p.sum(i) + p.sum((i + 1) % k);
  }
  return sums;
}

std::vector<Label> closed_cycle_sums_by_iteration(const Partition& p) {
  const std::size_t k = p.k();
  if (k < 3) throw PreconditionError("the cycle blow-up needs at least 3 blocks");
  auto adjacent = [k](std::size_t i, std::size_t j) {
    return (i + 1) % k == j || (j + 1) % k == i;
  };
  std::vector<Label> sums(static_cast<std::size_t>(p.n()), 0);
  for (Label x = 1; x <= p.n(); ++x) {
    const std::size_t i = p.block_of(x);
    Label& acc = sums[static_cast<std::size_t>(x - 1)];
    acc = x;
    for (Label y = 1; y <= p.n(); ++y) {
      if (y == x) continue;
      const std::size_t j = p.block_of(y);
      if (j == i || adjacent(i, j)) acc += y;
    }
  }
  return sums;
}

MagicCheck verify_closed_magic_cycle(const Partition& p) {
  const auto sums = closed_cycle_sums_by_blocks(p);
  bool cross_checked = false;
  if (p.n() <= kExplicitCheckLimit) {
    cross_check(sums, closed_cycle_sums_by_iteration(p), "closed distance magic");
    cross_checked = true;
  }
  MagicCheck check = summarize(sums);
  check.degenerate = p.k() == 3;
  check.cross_checked = cross_checked;
  return check;
}

}  // namespace dmlab
