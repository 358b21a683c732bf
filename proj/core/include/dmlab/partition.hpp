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

// Exact-integer algebra on partitions of [n] = {1, ..., n}.
//
// A partition carries its block sums; the deviation potential
//
//   d(P) = sum_i (S(B_i) - s)^2
//
// vanishes exactly on equitable partitions, and exchanging a < b between two
// blocks changes it by 2t(t - u), with t = b - a and u the sum of b's block
// minus the sum of a's block.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmlab {

using Label = std::int64_t;

// Largest ground-set size accepted anywhere in the library.
inline constexpr Label kMaxGroundSet = Label{1} << 31;

// n(n+1)/2. Throws InputRangeError for n outside [0, kMaxGroundSet].
Label total_sum(Label n);

// n(n+1)/(2k) when 2k divides n(n+1), nullopt otherwise.
// Throws InputRangeError when n < 1, k < 1 or n > kMaxGroundSet.
std::optional<Label> magic_sum(Label n, Label k);

// A problem statement: ground set [n] split into blocks of the given sizes.
// Sizes are stored in non-decreasing order whatever order they were given in.
class Instance {
 public:
  // Throws InvalidInputError unless every size is positive and they sum to n.
  Instance(Label n, std::vector<Label> sizes);

  Label n() const { return n_; }
  std::size_t k() const { return sizes_.size(); }
  const std::vector<Label>& sizes() const { return sizes_; }
  Label size(std::size_t i) const { return sizes_[i]; }

  // P_j = p_1 + ... + p_j for j = 1..k (index j-1).
  std::vector<Label> prefix_sizes() const;

  std::optional<Label> magic_sum() const;

  std::string to_string() const;

  friend bool operator==(const Instance&, const Instance&) = default;
  friend auto operator<=>(const Instance& lhs, const Instance& rhs) {
    if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
    if (auto c = lhs.k() <=> rhs.k(); c != 0) return c;
    return lhs.sizes_ <=> rhs.sizes_;
  }

 private:
  Label n_;
  std::vector<Label> sizes_;
};

enum class BlockClass { kLow, kExact, kHigh };

const char* to_string(BlockClass c);

// Minimum y - x over y in a high block and x < y in a low block, or infinite.
class Width {
 public:
  static Width infinite() { return Width(); }
  static Width finite(Label value) { return Width(value); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Precondition: is_finite().
  Label value() const { return *value_; }

  std::string to_string() const;

  friend bool operator==(const Width&, const Width&) = default;
  // Finite widths order below infinite.
  friend std::strong_ordering operator<=>(const Width& lhs, const Width& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) {
      return lhs.is_infinite() <=> rhs.is_infinite();
    }
    return *lhs.value_ <=> *rhs.value_;
  }

 private:
  Width() = default;
  explicit Width(Label value) : value_(value) {}

  std::optional<Label> value_;
};

// A labeled set partition of [n] into k non-empty blocks.
//
// Blocks keep the order they were given in (the size slot order of the
// instance they implement); elements inside a block are sorted ascending.
// Values are immutable: swap() and friends return new partitions.
class Partition {
 public:
  // Throws InvalidInputError unless the blocks are non-empty, pairwise
  // disjoint and cover exactly {1, ..., n}.
  static Partition from_blocks(Label n, std::vector<std::vector<Label>> blocks);

  Label n() const { return n_; }
  std::size_t k() const { return blocks_.size(); }

  const std::vector<std::vector<Label>>& blocks() const { return blocks_; }
  std::span<const Label> block(std::size_t i) const { return blocks_[i]; }
  const std::vector<Label>& sums() const { return sums_; }
  Label sum(std::size_t i) const { return sums_[i]; }
  std::vector<Label> block_sizes() const;

  bool contains(Label x) const { return x >= 1 && x <= n_; }
  // Index of the block holding x. Precondition: contains(x).
  std::size_t block_of(Label x) const {
    return owner_[static_cast<std::size_t>(x - 1)];
  }

  // Blocks ordered by their least element; equal partitions as set systems
  // have equal canonical forms.
  std::vector<std::vector<Label>> canonical_blocks() const;

  std::string to_string() const;

  // Same blocks in the same order.
  friend bool operator==(const Partition& lhs, const Partition& rhs) {
    return lhs.n_ == rhs.n_ && lhs.blocks_ == rhs.blocks_;
  }

 private:
  friend Partition swap(const Partition& p, Label a, Label b);

  Partition() = default;

  Label n_ = 0;
  std::vector<std::vector<Label>> blocks_;
  std::vector<Label> sums_;
  std::vector<std::uint32_t> owner_;
};

// sum_i (sums[i] - s)^2. Throws InputRangeError if the value overflows.
Label deviation(const Partition& p, Label s);

// Exchange a and b between their blocks.
// Throws PreconditionError unless 1 <= a < b <= n and a, b lie in different
// blocks.
Partition swap(const Partition& p, Label a, Label b);

// deviation(swap(p, a, b), s) - deviation(p, s), computed as 2t(t - u).
// The value does not depend on s. Same preconditions as swap().
Label swap_delta(const Partition& p, Label a, Label b, Label s);

Width width(const Partition& p, Label s);

BlockClass classify(Label block_sum, Label s);

// True iff p and q have the same multiset of block sums.
// Throws PreconditionError if n or k differ.
bool equivalent(const Partition& p, const Partition& q);

// True iff the multiset of block sizes equals the multiset of sizes.
bool implements(const Partition& p, std::span<const Label> sizes);

bool is_equitable(const Partition& p, Label s);

}  // namespace dmlab
