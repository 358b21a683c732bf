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

#include "dmlab/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmlab/errors.hpp"

namespace dmlab {

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kInfeasibleDivisibility:
      return "infeasible_divisibility";
    case VerdictStatus::kInfeasibleCondition:
      return "infeasible_condition";
    case VerdictStatus::kInfeasibleSizeOne:
      return "infeasible_size_one";
    case VerdictStatus::kFeasibleProven:
      return "feasible_proven";
    case VerdictStatus::kConditionHoldsConjectured:
      return "condition_holds_conjectured";
  }
  return "?";
}

Label prefix_top_sum(Label n, Label count) {
  if (count < 0 || count > n) {
    throw PreconditionError("prefix length " + std::to_string(count) +
                            " outside [0, " + std::to_string(n) + "]");
  }
  return count * n - count * (count - 1) / 2;
}

std::optional<ConditionFailure> first_condition_failure(const Instance& inst) {
  const auto s = inst.magic_sum();
  if (!s) throw PreconditionError("magic sum is not integral for " + inst.to_string());

  const auto prefix = inst.prefix_sizes();
  for (std::size_t j = 1; j <= inst.k(); ++j) {
    const Label lhs = prefix_top_sum(inst.n(), prefix[j - 1]);
    const Label rhs = static_cast<Label>(j) * *s;
    if (lhs < rhs) return ConditionFailure{j, lhs, rhs};
  }
  // The j = k row is the total-sum identity.
  if (prefix_top_sum(inst.n(), prefix.back()) !=
      static_cast<Label>(inst.k()) * *s) {
    throw std::logic_error("total-sum identity violated");
  }
  return std::nullopt;
}

bool necessary_condition(const Instance& inst) {
  return !first_condition_failure(inst).has_value();
}

Verdict feasibility(const Instance& inst) {
  Verdict v;
  v.magic_sum = inst.magic_sum();
  if (!v.magic_sum) {
    v.status = VerdictStatus::kInfeasibleDivisibility;
    v.reason = std::to_string(2 * inst.k()) + " does not divide n(n+1) = " +
               std::to_string(2 * total_sum(inst.n()));
    return v;
  }
  const Label s = *v.magic_sum;
  const Label n = inst.n();

  // A size-1 block equal to {x} needs x = s, and every element other than n
  // needs a partner, so only (1, 2, ..., 2) with s = n can work.
  if (inst.size(0) == 1) {
    const bool pairs_only = std::all_of(inst.sizes().begin() + 1, inst.sizes().end(),
                                        [](Label p) { return p == 2; });
    if (s != n) {
      v.status = VerdictStatus::kInfeasibleSizeOne;
      v.reason = "the size-1 block must be {n}, but s = " + std::to_string(s) +
                 " != n = " + std::to_string(n);
    } else if (!pairs_only) {
      v.status = VerdictStatus::kInfeasibleSizeOne;
      v.reason = "with a size-1 block every other block must have size 2";
    } else {
      v.status = VerdictStatus::kFeasibleProven;
      v.reason = "{n} plus the pairs {i, n-i}";
    }
    return v;
  }

  if (auto failure = first_condition_failure(inst)) {
    v.status = VerdictStatus::kInfeasibleCondition;
    v.failure = failure;
    v.reason = "condition fails at j=" + std::to_string(failure->j) + " (" +
               std::to_string(failure->lhs) + " < " +
               std::to_string(failure->rhs) + ")";
    return v;
  }

  if (inst.k() <= 4) {
    v.status = VerdictStatus::kFeasibleProven;
    v.reason = "prefix condition holds and is sufficient for k <= 4";
  } else {
    v.status = VerdictStatus::kConditionHoldsConjectured;
    v.reason = "prefix condition holds; sufficiency for k >= 5 is conjectural";
  }
  return v;
}

}  // namespace dmlab
