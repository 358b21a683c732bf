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

#include <algorithm>
#include <numeric>
#include <vector>

#include "dmlab/errors.hpp"
#include "dmlab/rng.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

Partition solve_k2(const Instance& inst) {
  if (inst.k() != 2) throw PreconditionError("solve_k2 needs k = 2");
  if (inst.size(0) < 2) throw PreconditionError("solve_k2 needs p_1 >= 2");
  const auto s = inst.magic_sum();
  if (!s) throw PreconditionError("magic sum is not integral: " + inst.to_string());
  if (auto failure = first_condition_failure(inst)) {
    throw PreconditionError("prefix condition fails at j=" +
                            std::to_string(failure->j) + " (" +
                            std::to_string(failure->lhs) + " < " +
                            std::to_string(failure->rhs) + ")");
  }

  const Label n = inst.n();
  const Label p1 = inst.size(0);
  std::vector<Label> low(static_cast<std::size_t>(p1));
  std::iota(low.begin(), low.end(), Label{1});

  // Sliding {1..p_1} upward one unit at a time never skips a sum, so the
  // first configuration reaching s is found by raising the top positions
  // as far as they go, highest first.
  Label deficit = *s - p1 * (p1 + 1) / 2;
  for (Label j = p1; j >= 1 && deficit > 0; --j) {
    Label& x = low[static_cast<std::size_t>(j - 1)];
    const Label raised = std::min(x + deficit, n - (p1 - j));
    deficit -= raised - x;
    x = raised;
  }
  if (deficit != 0) throw std::logic_error("k=2 construction left a deficit");

  std::vector<Label> high(static_cast<std::size_t>(n - p1));
  auto out = high.begin();
  Label next = 1;
  for (Label x : low) {
    std::iota(out, out + (x - next), next);
    out += x - next;
    next = x + 1;
  }
  std::iota(out, high.end(), next);
  // Not a braced list: that would copy both blocks.
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(2);
  blocks.push_back(std::move(low));
  blocks.push_back(std::move(high));
  return Partition::from_blocks(n, std::move(blocks));
}

Partition solve_p1_eq_1(const Instance& inst) {
  const Label n = inst.n();
  const bool shape_ok =
      inst.size(0) == 1 &&
      std::all_of(inst.sizes().begin() + 1, inst.sizes().end(),
                  [](Label p) { return p == 2; }) &&
      n == 2 * static_cast<Label>(inst.k()) - 1;
  if (!shape_ok) {
    throw PreconditionError("solve_p1_eq_1 needs sizes (1,2,...,2) with n = 2k-1");
  }
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(inst.k());
  blocks.push_back({n});
  for (Label i = 1; i <= (n - 1) / 2; ++i) blocks.push_back({i, n - i});
  return Partition::from_blocks(n, std::move(blocks));
}

Partition greedy_init(const Instance& inst, std::uint64_t seed) {
  const auto s = inst.magic_sum();
  if (!s) throw PreconditionError("magic sum is not integral: " + inst.to_string());

  const std::size_t k = inst.k();
  std::vector<Label> open = inst.sizes();
  std::vector<Label> sums(k, 0);
  std::vector<std::vector<Label>> blocks(k);
  XorShift64Star rng(seed);
  const std::size_t random_placements = seed == 0 ? 0 : (k + 1) / 2;

  std::vector<std::size_t> candidates;
  candidates.reserve(k);
  std::size_t placed = 0;
  for (Label label = inst.n(); label >= 1; --label, ++placed) {
    candidates.clear();
    if (placed < random_placements) {
      for (std::size_t i = 0; i < k; ++i) {
        if (open[i] > 0) candidates.push_back(i);
      }
    } else {
      Label best = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (open[i] == 0) continue;
        const Label deficit = *s - sums[i];
        if (candidates.empty() || deficit > best) {
          candidates.assign(1, i);
          best = deficit;
        } else if (deficit == best) {
          candidates.push_back(i);
        }
      }
    }
    const std::size_t pick =
        seed == 0 ? candidates.front() : candidates[rng.below(candidates.size())];
    blocks[pick].push_back(label);
    sums[pick] += label;
    --open[pick];
  }
  return Partition::from_blocks(inst.n(), std::move(blocks));
}

}  // namespace dmlab
