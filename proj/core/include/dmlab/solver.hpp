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

// Finding equitable partitions.
//
//  * solve_exact: complete backtracking, the ground truth for everything else.
//  * solve_k2 / solve_p1_eq_1: closed-form constructions.
//  * greedy_init + local_search: deviation descent over exchange moves.
//  * solve: the pipeline tying these to the feasibility verdict.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dmlab/feasibility.hpp"
#include "dmlab/partition.hpp"

namespace dmlab {

struct SearchParams {
  std::uint64_t seed = 0;
  std::int64_t max_restarts = 64;
  // Zero-delta moves allowed per descent; nullopt means 2n.
  std::optional<std::int64_t> max_plateau_steps;
  std::int64_t exact_node_budget = 100'000'000;
  std::int64_t exact_cutoff_n = 24;

  // Throws InvalidInputError if any field is negative.
  void validate() const;
  std::int64_t plateau_steps_for(Label n) const {
    return max_plateau_steps ? *max_plateau_steps : 2 * n;
  }
};

enum class ExactStatus { kFound, kNotFound, kBudgetExhausted };

const char* to_string(ExactStatus status);

struct ExactResult {
  ExactStatus status = ExactStatus::kNotFound;
  std::optional<Partition> partition;  // present iff kFound
  std::uint64_t nodes = 0;
};

// Backtracking over the placement of n, n-1, ..., 1 into blocks, pruned by
// completion bounds and by merging blocks whose remaining (slots, deficit)
// coincide. Blocks come back in the instance's size-slot order.
// Throws PreconditionError if the magic sum is not integral.
ExactResult solve_exact(const Instance& inst, std::int64_t node_budget);

// k = 2 construction: start from {1..p_1} and slide the top elements up
// until the block reaches s. Throws PreconditionError unless k = 2, p_1 >= 2
// and the prefix condition holds.
Partition solve_k2(const Instance& inst);

// {n} together with the pairs {i, n-i}. Throws PreconditionError unless the
// sizes are (1, 2, ..., 2) with n = 2k - 1.
Partition solve_p1_eq_1(const Instance& inst);

// Largest label first, each into the open block with the largest deficit
// (lowest index on ties). A non-zero seed randomizes ties and the first
// ceil(k/2) placements via XorShift64Star(seed).
// Throws PreconditionError if the magic sum is not integral.
Partition greedy_init(const Instance& inst, std::uint64_t seed);

struct LocalSearchStats {
  std::int64_t improving_swaps = 0;
  std::int64_t plateau_swaps = 0;
  std::int64_t restarts = 0;
};

struct LocalSearchEvent {
  enum class Kind { kImprove, kPlateau, kRestart };
  Kind kind = Kind::kImprove;
  Label a = 0;  // unset for kRestart
  Label b = 0;
  Label delta = 0;
  Label deviation_after = 0;
};

using LocalSearchObserver = std::function<void(const LocalSearchEvent&)>;

struct LocalSearchResult {
  Partition best;
  Label best_deviation = 0;
  Width best_width = Width::infinite();
  LocalSearchStats stats;
};

// Steepest descent on the deviation. Each step takes the most negative
// exchange delta over all pairs a < b in different blocks (smallest (a, b)
// on ties). At a local minimum, zero-delta exchanges are tried, preferring
// ones that shrink the width; after the plateau budget runs out the search
// restarts from greedy_init(seed + r). Returns the best partition seen
// (least deviation, then least width). Block sizes per slot are preserved.
LocalSearchResult local_search_run(const Partition& start, Label s,
                                   const SearchParams& params,
                                   const LocalSearchObserver& observer = {});

Partition local_search(const Partition& start, Label s,
                       const SearchParams& params);

enum class SolveStatus { kSolved, kProvenInfeasible, kBudgetExhausted };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::int64_t swaps = 0;
  std::int64_t restarts = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string method;  // which route produced the result
};

struct SolveResult {
  SolveStatus status = SolveStatus::kBudgetExhausted;
  std::optional<Partition> partition;  // present iff kSolved
  Verdict verdict;
  SolveStats stats;
};

SolveResult solve(const Instance& inst, const SearchParams& params);

}  // namespace dmlab
