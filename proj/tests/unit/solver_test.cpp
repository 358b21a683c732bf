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

#include "dmlab/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dmlab/errors.hpp"
#include "dmlab/lab.hpp"
#include "dmlab/rng.hpp"
#include "oracles.hpp"

namespace dmlab {
namespace {

using testing::Blocks;

Partition P(Label n, Blocks blocks) { return Partition::from_blocks(n, std::move(blocks)); }

void ExpectEquitable(const Partition& p, const Instance& inst) {
  EXPECT_TRUE(implements(p, inst.sizes())) << p.to_string();
  EXPECT_TRUE(is_equitable(p, *inst.magic_sum())) << p.to_string();
  EXPECT_EQ(p.block_sizes(), inst.sizes()) << "blocks must follow size-slot order";
}

TEST(SolveExactTest, Examples) {
  const Instance a(8, {2, 2, 2, 2});
  auto ra = solve_exact(a, 1'000'000);
  ASSERT_EQ(ra.status, ExactStatus::kFound);
  ExpectEquitable(*ra.partition, a);

  auto rb = solve_exact(Instance(12, {2, 2, 8}), 1'000'000);
  EXPECT_EQ(rb.status, ExactStatus::kNotFound);
  EXPECT_FALSE(rb.partition.has_value());

  const Instance c(9, {2, 3, 4});
  auto rc = solve_exact(c, 1'000'000);
  ASSERT_EQ(rc.status, ExactStatus::kFound);
  ExpectEquitable(*rc.partition, c);
}

TEST(SolveExactTest, BudgetExhaustion) {
  const Instance inst(15, {3, 3, 4, 5});
  EXPECT_EQ(solve_exact(inst, 0).status, ExactStatus::kBudgetExhausted);
  EXPECT_EQ(solve_exact(inst, 1'000'000).status, ExactStatus::kFound);
}

TEST(SolveExactTest, RequiresIntegralMagicSum) {
  EXPECT_THROW(solve_exact(Instance(6, {3, 3}), 100), PreconditionError);
}

// The pruned search and the unpruned enumeration must agree on existence.
TEST(SolveExactTest, AgreesWithNaiveEnumeration) {
  int compared = 0;
  for (Label n = 1; n <= 12; ++n) {
    for (Label k = 1; k <= 5; ++k) {
      const auto s = magic_sum(n, k);
      if (!s) continue;
      for (const auto& sizes : testing::naive_size_sequences(n, k, 1)) {
        const Instance inst(n, sizes);
        const bool naive = testing::naive_equitable(n, inst.sizes(), *s).has_value();
        const auto exact = solve_exact(inst, 100'000'000);
        ASSERT_NE(exact.status, ExactStatus::kBudgetExhausted);
        ASSERT_EQ(exact.status == ExactStatus::kFound, naive) << inst.to_string();
        if (exact.partition) ExpectEquitable(*exact.partition, inst);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 80);
}

TEST(SolveExactTest, ConditionIsSufficientForSmallK) {
  for (Label n = 4; n <= 16; ++n) {
    for (Label k = 2; k <= 4; ++k) {
      if (!magic_sum(n, k)) continue;
      for (const auto& sizes : enumerate_size_sequences(n, k, 2)) {
        const Instance inst(n, sizes);
        const auto exact = solve_exact(inst, 100'000'000);
        ASSERT_EQ(exact.status == ExactStatus::kFound, necessary_condition(inst))
            << inst.to_string();
      }
    }
  }
}

TEST(SolveK2Test, Examples) {
  // s = 14: deficit 8 lifts 3 -> 7, then 2 -> 6.
  EXPECT_EQ(solve_k2(Instance(7, {3, 4})), P(7, {{1, 6, 7}, {2, 3, 4, 5}}));
  EXPECT_EQ(solve_k2(Instance(4, {2, 2})), P(4, {{1, 4}, {2, 3}}));
  // Top-2 sum 15 < 18.
  EXPECT_THROW(solve_k2(Instance(8, {2, 6})), PreconditionError);
}

TEST(SolveK2Test, Preconditions) {
  EXPECT_THROW(solve_k2(Instance(8, {2, 2, 4})), PreconditionError);
  EXPECT_THROW(solve_k2(Instance(6, {3, 3})), PreconditionError);
  EXPECT_THROW(solve_k2(Instance(3, {1, 2})), PreconditionError);
}

TEST(SolveK2Test, EveryFeasibleSmallInstance) {
  for (Label n = 4; n <= 200; ++n) {
    if (!magic_sum(n, 2)) continue;
    for (Label p1 = 2; 2 * p1 <= n; ++p1) {
      const Instance inst(n, {p1, n - p1});
      if (!necessary_condition(inst)) {
        EXPECT_THROW(solve_k2(inst), PreconditionError);
        continue;
      }
      ExpectEquitable(solve_k2(inst), inst);
    }
  }
}

TEST(SolveP1Test, Examples) {
  EXPECT_EQ(solve_p1_eq_1(Instance(7, {1, 2, 2, 2})), P(7, {{7}, {1, 6}, {2, 5}, {3, 4}}));
  EXPECT_EQ(solve_p1_eq_1(Instance(5, {1, 2, 2})), P(5, {{5}, {1, 4}, {2, 3}}));
  EXPECT_EQ(solve_p1_eq_1(Instance(3, {1, 2})), P(3, {{3}, {1, 2}}));
  EXPECT_EQ(solve_p1_eq_1(Instance(1, {1})), P(1, {{1}}));
  EXPECT_THROW(solve_p1_eq_1(Instance(9, {1, 2, 6})), PreconditionError);
  EXPECT_THROW(solve_p1_eq_1(Instance(6, {2, 2, 2})), PreconditionError);
}

TEST(GreedyInitTest, Examples) {
  EXPECT_EQ(greedy_init(Instance(8, {2, 2, 2, 2}), 0),
            P(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  EXPECT_EQ(greedy_init(Instance(4, {2, 2}), 0), P(4, {{1, 4}, {2, 3}}));
  EXPECT_THROW(greedy_init(Instance(6, {3, 3}), 0), PreconditionError);
}

TEST(GreedyInitTest, StructureAndReproducibility) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const Label n = std::uniform_int_distribution<Label>(3, 40)(rng);
    const Label k = std::uniform_int_distribution<Label>(1, std::min<Label>(n, 6))(rng);
    if (!magic_sum(n, k)) continue;
    const auto all = enumerate_size_sequences(n, k, 1);
    const Instance inst(n, all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    const std::uint64_t seed = rng();
    const Partition p = greedy_init(inst, seed);
    ASSERT_EQ(p.block_sizes(), inst.sizes());
    ASSERT_EQ(p.n(), n);
    ASSERT_EQ(greedy_init(inst, seed), p);
  }
}

TEST(XorShiftTest, KnownSequence) {
  // xorshift64* from state 1.
  XorShift64Star rng(1);
  EXPECT_EQ(rng.next(), 0x47E4CE4B896CDD1DULL);
  XorShift64Star zero(0);
  XorShift64Star fixed(XorShift64Star::kZeroSeedState);
  EXPECT_EQ(zero.next(), fixed.next());
}

TEST(LocalSearchTest, TakesSteepestLexicographicMove) {
  std::vector<LocalSearchEvent> events;
  const auto result = local_search_run(P(4, {{1, 2}, {3, 4}}), 5, SearchParams{},
                                       [&](const LocalSearchEvent& e) { events.push_back(e); });
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, LocalSearchEvent::Kind::kImprove);
  EXPECT_EQ(events[0].a, 1);
  EXPECT_EQ(events[0].b, 3);
  EXPECT_EQ(events[0].delta, -8);
  EXPECT_EQ(result.best, P(4, {{2, 3}, {1, 4}}));
  EXPECT_EQ(result.best_deviation, 0);
}

TEST(LocalSearchTest, EquitableStartIsReturnedUnchanged) {
  const auto start = P(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}});
  std::size_t events = 0;
  const auto result = local_search_run(start, 9, SearchParams{},
                                       [&](const LocalSearchEvent&) { ++events; });
  EXPECT_EQ(result.best, start);
  EXPECT_EQ(events, 0u);
  EXPECT_EQ(local_search(start, 9, SearchParams{}), start);
}

// Replays every move on a shadow partition: improving moves lower the
// deviation by exactly their swap delta, plateau moves keep it.
TEST(LocalSearchTest, TrajectoryMatchesSwapAlgebra) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (Label n = 6; n <= 22; ++n) {
    for (Label k = 3; k <= 5; ++k) {
      const auto s = magic_sum(n, k);
      if (!s) continue;
      for (const auto& sizes : enumerate_size_sequences(n, k, 2)) {
        const Instance inst(n, sizes);
        Partition shadow = greedy_init(inst, rng() | 1);
        SearchParams params;
        params.max_restarts = 0;
        Label d = deviation(shadow, *s);
        const auto result = local_search_run(shadow, *s, params, [&](const LocalSearchEvent& e) {
          ASSERT_NE(e.kind, LocalSearchEvent::Kind::kRestart);
          const Label delta = swap_delta(shadow, e.a, e.b, *s);
          ASSERT_EQ(delta, e.delta);
          if (e.kind == LocalSearchEvent::Kind::kImprove) {
            ASSERT_LT(delta, 0);
          } else {
            ASSERT_EQ(delta, 0);
          }
          shadow = swap(shadow, e.a, e.b);
          ASSERT_EQ(deviation(shadow, *s), d + delta);
          d += delta;
          ASSERT_EQ(e.deviation_after, d);
        });
        ASSERT_LE(result.best_deviation, d);
        ASSERT_EQ(deviation(result.best, *s), result.best_deviation);
        ASSERT_EQ(result.best.block_sizes(), inst.sizes());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(LocalSearchTest, DeviationNeverIncreasesBetweenRestarts) {
  const Instance inst(20, {2, 2, 2, 2, 4, 4, 4});  // k = 7, s = 30
  ASSERT_TRUE(inst.magic_sum());
  SearchParams params;
  params.seed = 5;
  params.max_restarts = 6;
  Label last = -1;
  const auto result = local_search_run(greedy_init(inst, 5), 30, params,
                                       [&](const LocalSearchEvent& e) {
                                         if (e.kind != LocalSearchEvent::Kind::kRestart) {
                                           if (last >= 0) ASSERT_LE(e.deviation_after, last);
                                         }
                                         last = e.deviation_after;
                                       });
  EXPECT_EQ(deviation(result.best, 30), result.best_deviation);
}

TEST(SolveTest, Examples) {
  const Instance a(8, {2, 2, 2, 2});
  const auto ra = solve(a, SearchParams{});
  ASSERT_EQ(ra.status, SolveStatus::kSolved);
  ExpectEquitable(*ra.partition, a);

  const auto rb = solve(Instance(12, {2, 2, 8}), SearchParams{});
  EXPECT_EQ(rb.status, SolveStatus::kProvenInfeasible);
  EXPECT_EQ(rb.verdict.status, VerdictStatus::kInfeasibleCondition);
  EXPECT_EQ(rb.verdict.failure->j, 1u);

  const auto rc = solve(Instance(7, {1, 2, 2, 2}), SearchParams{});
  ASSERT_EQ(rc.status, SolveStatus::kSolved);
  EXPECT_EQ(*rc.partition, P(7, {{7}, {1, 6}, {2, 5}, {3, 4}}));
  EXPECT_EQ(rc.stats.method, "size_one_rule");
}

TEST(SolveTest, Routes) {
  EXPECT_EQ(solve(Instance(5, {5}), SearchParams{}).stats.method, "single_block");
  EXPECT_EQ(solve(Instance(7, {3, 4}), SearchParams{}).stats.method, "k2_construction");
  EXPECT_EQ(solve(Instance(6, {3, 3}), SearchParams{}).stats.method, "verdict");
}

TEST(SolveTest, ExactFallbackAndBudget) {
  // With no search effort at all the descent stops at the greedy start;
  // the exact fallback has to finish the job.
  SearchParams params;
  params.max_restarts = 0;
  params.max_plateau_steps = 0;
  int fallbacks = 0;
  for (Label n = 6; n <= 20; ++n) {
    for (Label k = 3; k <= 5; ++k) {
      if (!magic_sum(n, k)) continue;
      for (const auto& sizes : enumerate_size_sequences(n, k, 2)) {
        const Instance inst(n, sizes);
        const auto r = solve(inst, params);
        if (r.stats.method != "exact") continue;
        ++fallbacks;
        if (r.status == SolveStatus::kSolved) ExpectEquitable(*r.partition, inst);

        SearchParams no_exact = params;
        no_exact.exact_cutoff_n = 0;
        EXPECT_EQ(solve(inst, no_exact).status, SolveStatus::kBudgetExhausted);
      }
    }
  }
  EXPECT_GT(fallbacks, 0);
}

TEST(SolveTest, DeterministicForFixedSeed) {
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    SearchParams params;
    params.seed = seed;
    const Instance inst(20, {2, 2, 2, 2, 4, 4, 4});
    const auto a = solve(inst, params);
    const auto b = solve(inst, params);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_EQ(a.stats.swaps, b.stats.swaps);
  }
}

TEST(SolveTest, RejectsNegativeParams) {
  SearchParams params;
  params.max_restarts = -1;
  EXPECT_THROW(solve(Instance(8, {2, 2, 2, 2}), params), InvalidInputError);
}

}  // namespace
}  // namespace dmlab
