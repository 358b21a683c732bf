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

#include <cstdint>
#include <vector>

#include "dmlab/errors.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

namespace {

// Elements are placed largest first, so when element e is next the pool of
// unplaced elements is exactly {1, ..., e}. A block with r open slots and
// deficit m can still be completed from {1, ..., pool} only if
//   r(r+1)/2 <= m <= r*pool - r(r-1)/2.
// Two blocks with equal (r, m) are interchangeable for the rest of the
// search, so only the first of them is tried.
class ExactSearch {
 public:
  ExactSearch(const Instance& inst, Label s, std::int64_t budget)
      : n_(inst.n()),
        budget_(budget < 0 ? 0 : static_cast<std::uint64_t>(budget)),
        open_(inst.sizes()),
        deficit_(inst.k(), s),
        owner_(static_cast<std::size_t>(inst.n()), 0) {}

  ExactStatus run() {
    if (!completable(n_)) return ExactStatus::kNotFound;
    if (place(n_)) return ExactStatus::kFound;
    return exhausted_ ? ExactStatus::kBudgetExhausted : ExactStatus::kNotFound;
  }

  Partition partition() const {
    std::vector<std::vector<Label>> blocks(open_.size());
    for (Label x = 1; x <= n_; ++x) {
      blocks[owner_[static_cast<std::size_t>(x - 1)]].push_back(x);
    }
    return Partition::from_blocks(n_, std::move(blocks));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool completable(Label pool) const {
    for (std::size_t i = 0; i < open_.size(); ++i) {
      const Label r = open_[i];
      const Label m = deficit_[i];
      if (r == 0) {
        if (m != 0) return false;
        continue;
      }
      if (r > pool) return false;
      if (m < r * (r + 1) / 2) return false;
      if (m > r * pool - r * (r - 1) / 2) return false;
    }
    return true;
  }

  bool duplicate_of_earlier(std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) {
      if (open_[j] == open_[i] && deficit_[j] == deficit_[i]) return true;
    }
    return false;
  }

  bool place(Label e) {
    if (e == 0) return true;
    for (std::size_t i = 0; i < open_.size(); ++i) {
      if (open_[i] == 0 || deficit_[i] < e) continue;
      if (duplicate_of_earlier(i)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      --open_[i];
      deficit_[i] -= e;
      owner_[static_cast<std::size_t>(e - 1)] = static_cast<std::uint32_t>(i);
      if (completable(e - 1) && place(e - 1)) return true;
      ++open_[i];
      deficit_[i] += e;
      if (exhausted_) return false;
    }
    return false;
  }

  Label n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Label> open_;
  std::vector<Label> deficit_;
  std::vector<std::uint32_t> owner_;
};

}  // namespace

const char* to_string(ExactStatus status) {
  switch (status) {
    case ExactStatus::kFound:
      return "found";
    case ExactStatus::kNotFound:
      return "not_found";
    case ExactStatus::kBudgetExhausted:
      return "budget";
  }
  return "?";
}

ExactResult solve_exact(const Instance& inst, std::int64_t node_budget) {
  const auto s = inst.magic_sum();
  if (!s) {
    throw PreconditionError("exact search needs an integral magic sum: " +
                            inst.to_string());
  }
  ExactSearch search(inst, *s, node_budget);
  ExactResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == ExactStatus::kFound) result.partition = search.partition();
  return result;
}

}  // namespace dmlab
