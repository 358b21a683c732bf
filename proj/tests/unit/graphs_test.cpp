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


#include "dmlab/graphs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dmlab/errors.hpp"
#include "oracles.hpp"

namespace dmlab {
namespace {

using testing::Blocks;

Partition P(Label n, Blocks blocks) { return Partition::from_blocks(n, std::move(blocks)); }

// Open and closed neighborhood sums straight from the definition, using
// only the block lists.
std::vector<Label> open_sums(const Blocks& blocks, Label n) {
  std::vector<Label> out(static_cast<std::size_t>(n));
  for (const auto& b : blocks) {
    for (Label x : b) {
      Label sum = 0;
      for (const auto& c : blocks) {
        if (&c == &b) continue;
        for (Label y : c) sum += y;
      }
      out[static_cast<std::size_t>(x - 1)] = sum;
    }
  }
  return out;
}

std::vector<Label> closed_cycle_sums(const Blocks& blocks, Label n) {
  const std::size_t k = blocks.size();
  std::vector<Label> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < k; ++i) {
    Label sum = 0;
    for (std::size_t j : {(i + k - 1) % k, i, (i + 1) % k}) {
      for (Label y : blocks[j]) sum += y;
    }
    // k = 3 visits every block once; larger k visits three distinct blocks.
    for (Label x : blocks[i]) out[static_cast<std::size_t>(x - 1)] = sum;
  }
  return out;
}

TEST(DistanceMagicTest, Examples) {
  const auto a = verify_distance_magic(labeling_from_partition(P(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}})));
  EXPECT_TRUE(a.is_magic);
  EXPECT_EQ(a.constant, 27);
  EXPECT_TRUE(a.cross_checked);
  EXPECT_FALSE(a.witness.has_value());

  const auto b = verify_distance_magic(labeling_from_partition(P(4, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(b.is_magic);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(b.witness->u, 1);
  EXPECT_EQ(b.witness->v, 3);
  EXPECT_EQ(b.witness->sum_u, 7);
  EXPECT_EQ(b.witness->sum_v, 3);

  // K_{1,2} with the lone vertex labeled 3.
  const auto c = verify_distance_magic(labeling_from_partition(P(3, {{3}, {1, 2}})));
  EXPECT_TRUE(c.is_magic);
  EXPECT_EQ(c.constant, 3);
}

TEST(DistanceMagicTest, LargeGraphsSkipTheWalk) {
  const Label n = 400;
  Blocks blocks(2);
  for (Label x = 1; x <= n; ++x) blocks[(x % 4 == 0 || x % 4 == 1) ? 0 : 1].push_back(x);
  const auto check = verify_distance_magic(labeling_from_partition(P(n, blocks)));
  EXPECT_FALSE(check.cross_checked);
  EXPECT_TRUE(check.is_magic);
  EXPECT_EQ(check.constant, total_sum(n) / 2);
}

TEST(DistanceMagicTest, PartitionOverloadMatches) {
  std::mt19937_64 rng(5);
  for (Label n : {12, 250, 1000}) {
    for (std::size_t k : {2u, 3u}) {
      const auto p = P(n, testing::random_blocks(rng, n, k));
      const auto a = verify_distance_magic(p);
      const auto b = verify_distance_magic(labeling_from_partition(p));
      EXPECT_EQ(a.is_magic, b.is_magic);
      EXPECT_EQ(a.constant, b.constant);
      ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
      if (a.witness) EXPECT_EQ(a.witness->v, b.witness->v);
    }
  }
  Blocks halves(2);
  for (Label x = 1; x <= 1000; ++x) halves[(x % 4 == 0 || x % 4 == 1) ? 0 : 1].push_back(x);
  const auto check = verify_distance_magic(P(1000, halves));
  EXPECT_TRUE(check.is_magic);
  EXPECT_EQ(check.constant, total_sum(1000) / 2);
}

TEST(DistanceMagicTest, MagicIffEquitable) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 1000; ++iter) {
    const Label n = std::uniform_int_distribution<Label>(1, 16)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, std::min<Label>(n, 5))(rng);
    const auto blocks = testing::random_blocks(rng, n, k);
    const auto p = P(n, blocks);
    const auto g = labeling_from_partition(p);
    const auto expected = open_sums(blocks, n);
    ASSERT_EQ(neighbor_sums_by_complement(g), expected);
    ASSERT_EQ(neighbor_sums_by_iteration(g), expected);
    const auto check = verify_distance_magic(g);
    const auto s = magic_sum(n, static_cast<Label>(k));
    ASSERT_EQ(check.is_magic, s && is_equitable(p, *s));
  }
}

TEST(ClosedCycleTest, Examples) {
  const auto a = verify_closed_magic_cycle(P(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  EXPECT_TRUE(a.is_magic);
  EXPECT_EQ(a.constant, 27);
  EXPECT_FALSE(a.degenerate);

  const auto b = verify_closed_magic_cycle(P(9, {{1, 2, 3, 4}, {5, 6}, {7, 8, 9}}));
  EXPECT_TRUE(b.is_magic);
  EXPECT_EQ(b.constant, 45);
  EXPECT_TRUE(b.degenerate);

  // Sums 3, 7, 11, 15: closed sums 25, 21, 33, 29.
  const auto c = verify_closed_magic_cycle(P(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  EXPECT_FALSE(c.is_magic);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->sum_u, 25);
  EXPECT_EQ(c.witness->sum_v, 21);

  EXPECT_THROW(verify_closed_magic_cycle(P(4, {{1, 4}, {2, 3}})), PreconditionError);
}

TEST(ClosedCycleTest, RoutesAgreeWithDefinition) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 800; ++iter) {
    const Label n = std::uniform_int_distribution<Label>(3, 24)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(3, std::min<Label>(n, 7))(rng);
    const auto blocks = testing::random_blocks(rng, n, k);
    const auto p = P(n, blocks);
    const auto expected = closed_cycle_sums(blocks, n);
    ASSERT_EQ(closed_cycle_sums_by_blocks(p), expected);
    ASSERT_EQ(closed_cycle_sums_by_iteration(p), expected);
    ASSERT_EQ(verify_closed_magic_cycle(p).is_magic,
              std::all_of(expected.begin(), expected.end(),
                          [&](Label v) { return v == expected[0]; }));
  }
}

TEST(LabelingTest, RoundTripAndValidation) {
  const auto p = P(6, {{2, 5}, {1, 6}, {3, 4}});
  const auto g = labeling_from_partition(p);
  EXPECT_EQ(g.part_of(1), 1u);
  EXPECT_EQ(g.part_sums(), p.sums());
  EXPECT_EQ(partition_from_labeling(g), p);

  EXPECT_THROW(LabeledMultipartite({2, 2}, {0, 0, 1}), InvalidInputError);
  EXPECT_THROW(LabeledMultipartite({2, 2}, {0, 0, 1, 2}), InvalidInputError);
  EXPECT_THROW(LabeledMultipartite({}, {}), InvalidInputError);
  EXPECT_THROW(LabeledMultipartite({1, 3}, {0, 0, 1, 1}), InvalidInputError);
}

}  // namespace
}  // namespace dmlab
