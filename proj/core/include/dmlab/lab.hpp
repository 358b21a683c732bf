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

// Exhaustive sweeps comparing the feasibility prediction against the exact
// oracle over whole instance spaces.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmlab/feasibility.hpp"
#include "dmlab/partition.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

// Non-decreasing sequences of k integers >= min_part summing to n, in
// lexicographic order.
std::vector<std::vector<Label>> enumerate_size_sequences(Label n, Label k, Label min_part);

struct SweepRow {
  Instance instance;
  Verdict verdict;
  bool predicted = false;  // the rule under test says an equitable partition exists
  ExactStatus oracle = ExactStatus::kNotFound;
  std::uint64_t nodes = 0;
  bool agree = false;  // oracle resolved and matches the prediction
  std::optional<Partition> witness;
};

struct SweepConfig {
  enum class Kind { kPrefixCondition, kSymmetric };
  Kind kind = Kind::kPrefixCondition;
  Label n_max = 0;
  std::vector<Label> k_set;
  Label min_part = 2;
  Label max_total = 0;  // kSymmetric only
  std::int64_t budget = 100'000'000;
  unsigned workers = 1;
};

struct SweepTotals {
  std::int64_t rows = 0;
  std::int64_t predicted_feasible = 0;
  std::int64_t found = 0;
  std::int64_t not_found = 0;
  std::int64_t budget = 0;
  std::int64_t mismatches = 0;
  std::int64_t counterexample_candidates = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;        // sorted by instance
  std::vector<SweepRow> mismatches;  // rows with agree == false
  // k >= 5 rows where the prefix condition holds but no equitable
  // partition exists.
  std::vector<SweepRow> counterexample_candidates;
  SweepTotals totals;

  bool resolved() const { return totals.budget == 0; }
  bool clean() const { return totals.mismatches == 0; }
};

// Every n <= n_max, k in k_set with integral magic sum and every size
// sequence with parts >= min_part: feasibility() against solve_exact().
SweepReport sweep(Label n_max, std::vector<Label> k_set, Label min_part,
                  std::int64_t budget, unsigned workers = 1);

// Cited criterion for H_{m,p} (p parts of size m): a labeling exists iff
// m is even, or m and p are both odd. Single-vertex parts make H_{1,p} the
// complete graph K_p, which has no labeling for p >= 2.
bool symmetric_criterion(Label m, Label p);

// All m >= 1, p >= 2 with m*p <= max_total against the exact oracle;
// a non-integral magic sum counts as "no labeling".
SweepReport check_symmetric(Label max_total, std::int64_t budget, unsigned workers = 1);

}  // namespace dmlab
