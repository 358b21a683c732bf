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

// JSON documents emitted by the command-line tool. Field names are stable:
//
//   {"n", "k", "sizes", "status", "magic_sum", "blocks", "graph_constant",
//    "stats", ...}
//
// "blocks" is an array of ascending label arrays in size-slot order. No
// document contains timings, so identical inputs give identical bytes.

#pragma once

#include <nlohmann/json.hpp>

#include "dmlab/feasibility.hpp"
#include "dmlab/graphs.hpp"
#include "dmlab/lab.hpp"
#include "dmlab/partition.hpp"
#include "dmlab/solver.hpp"

namespace dmlab {

using Json = nlohmann::ordered_json;

Json blocks_to_json(const Partition& p);
Json verdict_to_json(const Verdict& v);
Json magic_check_to_json(const MagicCheck& check);

// {"n", "k", "sizes", "status", "magic_sum", "failing_index", "lhs", "rhs",
//  "reason"} for the check command.
Json check_document(const Instance& inst, const Verdict& v);

// Solve result; graph_constant is n(n+1)/2 - s when solved, null otherwise.
Json solve_document(const Instance& inst, const SolveResult& result);

Json sweep_document(const SweepReport& report);

// Reads {"blocks": [[...], ...]} with optional "n" (defaults to the number of
// labels). Any solve document is accepted. Throws InvalidInputError.
Partition partition_from_json(const Json& doc);

}  // namespace dmlab
