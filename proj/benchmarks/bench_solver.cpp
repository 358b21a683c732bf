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


#include <benchmark/benchmark.h>

#include "dmlab/graphs.hpp"
#include "dmlab/lab.hpp"
#include "dmlab/solver.hpp"

namespace {

using namespace dmlab;

// Smallest p_1 that satisfies the prefix condition for k = 2.
Instance k2_instance(Label n) {
  Label p1 = 2;
  while (prefix_top_sum(n, p1) < *magic_sum(n, 2)) ++p1;
  return Instance(n, {p1, n - p1});
}

void BM_SolveK2(benchmark::State& state) {
  const Instance inst = k2_instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_k2(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveK2)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_VerifyLarge(benchmark::State& state) {
  const Partition p = solve_k2(k2_instance(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_distance_magic(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyLarge)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_SolveExact(benchmark::State& state) {
  // Most balanced 4-block sizes; n must have 8 | n(n+1).
  const Label n = state.range(0);
  const auto seqs = enumerate_size_sequences(n, 4, 2);
  const Instance inst(n, seqs.back());
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst, 100'000'000));
}
BENCHMARK(BM_SolveExact)->Arg(16)->Arg(23)->Arg(24)->Arg(32);

void BM_LocalSearch(benchmark::State& state) {
  const Label n = state.range(0);
  const Instance inst(n, std::vector<Label>(4, n / 4));
  SearchParams params;
  params.exact_cutoff_n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, params));
}
BENCHMARK(BM_LocalSearch)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_SweepSmallK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(state.range(0), {2, 3, 4}, 2, 100'000'000));
}
BENCHMARK(BM_SweepSmallK)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
