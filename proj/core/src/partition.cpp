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

#include "dmlab/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "dmlab/errors.hpp"

namespace dmlab {

namespace {

constexpr std::uint32_t kUnowned = std::numeric_limits<std::uint32_t>::max();

void check_ground_set(Label n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw InputRangeError("ground-set size " + std::to_string(n) +
                          " outside [0, 2^31]");
  }
}

std::string join(std::span<const Label> xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    out << xs[i];
  }
  return out.str();
}

void check_swap_args(const Partition& p, Label a, Label b) {
  if (!p.contains(a) || !p.contains(b)) {
    throw PreconditionError("swap elements must lie in [1, n]");
  }
  if (a >= b) throw PreconditionError("swap requires a < b");
  if (p.block_of(a) == p.block_of(b)) {
    throw PreconditionError("swap elements " + std::to_string(a) + " and " +
                            std::to_string(b) + " share a block");
  }
}

}  // namespace

Label total_sum(Label n) {
  check_ground_set(n);
  // n <= 2^31 keeps n(n+1) below 2^63.
  return n * (n + 1) / 2;
}

std::optional<Label> magic_sum(Label n, Label k) {
  if (n < 1 || k < 1) {
    throw InputRangeError("magic_sum requires n >= 1 and k >= 1");
  }
  const Label total = total_sum(n);
  if (total % k != 0) return std::nullopt;
  return total / k;
}

Instance::Instance(Label n, std::vector<Label> sizes)
    : n_(n), sizes_(std::move(sizes)) {
  check_ground_set(n_);
  if (n_ < 1) throw InvalidInputError("n must be positive");
  if (sizes_.empty()) throw InvalidInputError("at least one size is required");
  Label total = 0;
  for (Label p : sizes_) {
    if (p < 1) {
      throw InvalidInputError("sizes must be positive, got " +
                              std::to_string(p));
    }
    if (p > n_) {
      throw InvalidInputError("size " + std::to_string(p) + " exceeds n");
    }
    total += p;
  }
  if (total != n_) {
    throw InvalidInputError("sizes sum to " + std::to_string(total) +
                            ", expected n = " + std::to_string(n_));
  }
  std::sort(sizes_.begin(), sizes_.end());
}

std::vector<Label> Instance::prefix_sizes() const {
  std::vector<Label> prefix(sizes_.size());
  Label running = 0;
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    running += sizes_[j];
    prefix[j] = running;
  }
  return prefix;
}

std::optional<Label> Instance::magic_sum() const {
  return dmlab::magic_sum(n_, static_cast<Label>(k()));
}

std::string Instance::to_string() const {
  return "n=" + std::to_string(n_) + " k=" + std::to_string(k()) +
         " sizes=(" + join(sizes_, ",") + ")";
}

const char* to_string(BlockClass c) {
  switch (c) {
    case BlockClass::kLow:
      return "low";
    case BlockClass::kExact:
      return "exact";
    case BlockClass::kHigh:
      return "high";
  }
  return "?";
}

std::string Width::to_string() const {
  return is_infinite() ? "inf" : std::to_string(*value_);
}

Partition Partition::from_blocks(Label n,
                                 std::vector<std::vector<Label>> blocks) {
  check_ground_set(n);
  if (n < 1) throw InvalidInputError("n must be positive");
  if (blocks.empty()) throw InvalidInputError("partition has no blocks");
  if (blocks.size() > static_cast<std::size_t>(n)) {
    throw InvalidInputError("more blocks than elements");
  }

  Partition p;
  p.n_ = n;
  p.owner_.assign(static_cast<std::size_t>(n), kUnowned);
  p.sums_.assign(blocks.size(), 0);
  Label covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& block = blocks[i];
    if (block.empty()) {
      throw InvalidInputError("block " + std::to_string(i) + " is empty");
    }
    // Constructions hand over sorted blocks; only sort the others.
    if (!std::is_sorted(block.begin(), block.end())) std::sort(block.begin(), block.end());
    if (block.front() < 1 || block.back() > n) {
      const Label bad = block.front() < 1 ? block.front() : block.back();
      throw InvalidInputError("element " + std::to_string(bad) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    Label sum = 0;
    std::uint32_t* owner = p.owner_.data();
    for (Label x : block) {
      if (owner[x - 1] != kUnowned) {
        throw InvalidInputError("element " + std::to_string(x) + " appears more than once");
      }
      owner[x - 1] = static_cast<std::uint32_t>(i);
      sum += x;
    }
    p.sums_[i] = sum;
    covered += static_cast<Label>(block.size());
  }
  if (covered != n) {
    throw InvalidInputError("blocks cover " + std::to_string(covered) +
                            " of " + std::to_string(n) + " elements");
  }
  p.blocks_ = std::move(blocks);
  return p;
}

std::vector<Label> Partition::block_sizes() const {
  std::vector<Label> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<Label>(b.size()));
  return sizes;
}

std::vector<std::vector<Label>> Partition::canonical_blocks() const {
  auto canon = blocks_;
  std::sort(canon.begin(), canon.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return canon;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ' ';
    out += '{' + join(blocks_[i], ",") + '}';
  }
  return out;
}

Label deviation(const Partition& p, Label s) {
  Label d = 0;
  for (Label sum : p.sums()) {
    Label diff = 0;
    Label sq = 0;
    if (__builtin_sub_overflow(sum, s, &diff) ||
        __builtin_mul_overflow(diff, diff, &sq) ||
        __builtin_add_overflow(d, sq, &d)) {
      throw InputRangeError("deviation overflows 64-bit arithmetic");
    }
  }
  return d;
}

Partition swap(const Partition& p, Label a, Label b) {
  check_swap_args(p, a, b);
  Partition q = p;
  const std::size_t ia = p.block_of(a);
  const std::size_t ib = p.block_of(b);
  auto replace = [](std::vector<Label>& block, Label out, Label in) {
    block.erase(std::lower_bound(block.begin(), block.end(), out));
    block.insert(std::lower_bound(block.begin(), block.end(), in), in);
  };
  replace(q.blocks_[ia], a, b);
  replace(q.blocks_[ib], b, a);
  q.sums_[ia] += b - a;
  q.sums_[ib] -= b - a;
  q.owner_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint32_t>(ib);
  q.owner_[static_cast<std::size_t>(b - 1)] = static_cast<std::uint32_t>(ia);
  return q;
}

Label swap_delta(const Partition& p, Label a, Label b, Label /*s*/) {
  check_swap_args(p, a, b);
  const Label t = b - a;
  const Label u = p.sum(p.block_of(b)) - p.sum(p.block_of(a));
  Label delta = 0;
  if (__builtin_mul_overflow(2 * t, t - u, &delta)) {
    throw InputRangeError("swap delta overflows 64-bit arithmetic");
  }
  return delta;
}

Width width(const Partition& p, Label s) {
  // Single sweep over 1..n: pair every high element with the nearest low
  // element below it.
  std::optional<Label> last_low;
  std::optional<Label> best;
  for (Label x = 1; x <= p.n(); ++x) {
    switch (classify(p.sum(p.block_of(x)), s)) {
      case BlockClass::kLow:
        last_low = x;
        break;
      case BlockClass::kHigh:
        if (last_low && (!best || x - *last_low < *best)) best = x - *last_low;
        break;
      case BlockClass::kExact:
        break;
    }
  }
  return best ? Width::finite(*best) : Width::infinite();
}

BlockClass classify(Label block_sum, Label s) {
  if (block_sum < s) return BlockClass::kLow;
  if (block_sum > s) return BlockClass::kHigh;
  return BlockClass::kExact;
}

bool equivalent(const Partition& p, const Partition& q) {
  if (p.n() != q.n() || p.k() != q.k()) {
    throw PreconditionError("equivalence needs equal n and k");
  }
  auto ps = p.sums();
  auto qs = q.sums();
  std::sort(ps.begin(), ps.end());
  std::sort(qs.begin(), qs.end());
  return ps == qs;
}

bool implements(const Partition& p, std::span<const Label> sizes) {
  if (sizes.size() != p.k()) return false;
  auto have = p.block_sizes();
  std::vector<Label> want(sizes.begin(), sizes.end());
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  return have == want;
}

bool is_equitable(const Partition& p, Label s) {
  return std::all_of(p.sums().begin(), p.sums().end(),
                     [s](Label x) { return x == s; });
}

}  // namespace dmlab
