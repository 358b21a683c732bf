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

#include <numeric>
#include <stdexcept>

#include "dmlab/solver.hpp"

namespace dmlab {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kProvenInfeasible:
      return "proven_infeasible";
    case SolveStatus::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

SolveResult solve_impl(const Instance& inst, const SearchParams& params) {
  SolveResult result;
  result.verdict = feasibility(inst);
  if (result.verdict.infeasible()) {
    result.status = SolveStatus::kProvenInfeasible;
    result.stats.method = "verdict";
    return result;
  }
  const Label s = *result.verdict.magic_sum;

  auto solved = [&](Partition p, const char* method) {
    result.status = SolveStatus::kSolved;
    result.partition = std::move(p);
    result.stats.method = method;
    return result;
  };

  if (inst.k() == 1) {
    std::vector<Label> all(static_cast<std::size_t>(inst.n()));
    std::iota(all.begin(), all.end(), Label{1});
    return solved(Partition::from_blocks(inst.n(), {std::move(all)}), "single_block");
  }
  if (inst.size(0) == 1) return solved(solve_p1_eq_1(inst), "size_one_rule");
  if (inst.k() == 2) return solved(solve_k2(inst), "k2_construction");

  const auto ls = local_search_run(greedy_init(inst, params.seed), s, params);
  result.stats.swaps = ls.stats.improving_swaps + ls.stats.plateau_swaps;
  result.stats.restarts = ls.stats.restarts;
  if (ls.best_deviation == 0) return solved(ls.best, "local_search");

  if (inst.n() > params.exact_cutoff_n) {
    result.status = SolveStatus::kBudgetExhausted;
    result.stats.method = "local_search";
    return result;
  }
  auto exact = solve_exact(inst, params.exact_node_budget);
  result.stats.nodes = exact.nodes;
  switch (exact.status) {
    case ExactStatus::kFound:
      return solved(std::move(*exact.partition), "exact");
    case ExactStatus::kNotFound:
      result.status = SolveStatus::kProvenInfeasible;
      break;
    case ExactStatus::kBudgetExhausted:
      result.status = SolveStatus::kBudgetExhausted;
      break;
  }
  result.stats.method = "exact";
  return result;
}

}  // namespace

SolveResult solve(const Instance& inst, const SearchParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  SolveResult result = solve_impl(inst, params);
  result.stats.elapsed = std::chrono::steady_clock::now() - start;

  if (result.status == SolveStatus::kSolved &&
      (!implements(*result.partition, inst.sizes()) ||
       !is_equitable(*result.partition, *result.verdict.magic_sum))) {
    throw std::logic_error("solver produced a non-equitable partition for " +
                           inst.to_string());
  }
  return result;
}

}  // namespace dmlab
