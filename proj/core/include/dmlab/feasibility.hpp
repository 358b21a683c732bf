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

// Deciding whether [n] has an equitable partition with given block sizes.
//
// With sizes p_1 <= ... <= p_k and P_j = p_1 + ... + p_j, an equitable
// partition can only exist if the P_j largest elements of [n] sum to at
// least j*s for every j (the j lowest-index blocks need that much mass).
// For k <= 4 (and p_1 >= 2) the prefix condition is also sufficient; for
// k >= 5 sufficiency is an open conjecture and verdicts say so.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dmlab/partition.hpp"

namespace dmlab {

enum class VerdictStatus {
  kInfeasibleDivisibility,
  kInfeasibleCondition,
  kInfeasibleSizeOne,
  kFeasibleProven,
  kConditionHoldsConjectured,
};

const char* to_string(VerdictStatus status);

// First prefix inequality that fails: lhs < rhs at 1-based index j.
struct ConditionFailure {
  std::size_t j = 0;
  Label lhs = 0;  // sum of the P_j largest elements of [n]
  Label rhs = 0;  // j * s

  friend bool operator==(const ConditionFailure&,
                         const ConditionFailure&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kInfeasibleDivisibility;
  std::optional<Label> magic_sum;
  std::optional<ConditionFailure> failure;  // only for kInfeasibleCondition
  std::string reason;

  bool infeasible() const {
    return status == VerdictStatus::kInfeasibleDivisibility ||
           status == VerdictStatus::kInfeasibleCondition ||
           status == VerdictStatus::kInfeasibleSizeOne;
  }
  bool predicts_feasible() const { return !infeasible(); }
  bool proven() const { return status != VerdictStatus::kConditionHoldsConjectured; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Sum of the `count` largest elements of [n]: count*n - count(count-1)/2.
// Throws PreconditionError unless 0 <= count <= n.
Label prefix_top_sum(Label n, Label count);

// Smallest j whose prefix inequality fails, if any.
// Throws PreconditionError when the magic sum is not integral.
std::optional<ConditionFailure> first_condition_failure(const Instance& inst);

// True iff every prefix inequality holds (including j = k, which is always
// an equality and is checked anyway).
bool necessary_condition(const Instance& inst);

Verdict feasibility(const Instance& inst);

}  // namespace dmlab
