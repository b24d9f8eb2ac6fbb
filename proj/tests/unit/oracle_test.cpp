// Copyright 2026 The infodiv Authors
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

#include "infodiv/oracle.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "infodiv/parallel.hpp"
#include "test_support.hpp"

namespace infodiv {
namespace {

using testing::error_kind;
using testing::Rows;

const ClusterOptions kDivisive{StopRule::kDivisiveOnly, 0.0};
const ClusterOptions kFull{StopRule::kFullTree, 0.0};

TEST(Combinatorics, ClosedForms) {
  EXPECT_EQ(bipartition_count(2), 1u);
  EXPECT_EQ(bipartition_count(4), 7u);
  EXPECT_EQ(bipartition_count(24), 8388607u);
  EXPECT_EQ(stirling2(3, 2), 3u);
  EXPECT_EQ(stirling2(5, 3), 25u);
  EXPECT_EQ(stirling2(4, 0), 0u);
  EXPECT_EQ(stirling2(0, 0), 1u);
  EXPECT_EQ(bell_number(3), 5u);
  EXPECT_EQ(bell_number(12), 4213597u);
}

TEST(ExhaustiveBisect, BlockMatrix) {
  auto model = probability_model(make_matrix(testing::block_matrix()));
  auto search = exhaustive_bisect_search(model, RowSubset::all(4), false);
  ASSERT_TRUE(search);
  EXPECT_EQ(search->candidates_examined, 7u);
  EXPECT_EQ(search->best.left, (RowSubset{0, 1}));
  EXPECT_EQ(search->best.right, (RowSubset{2, 3}));
  EXPECT_EQ(search->best.local_h0, 1.0);
}

TEST(ExhaustiveBisect, IdenticalRowsAndForcedPair) {
  auto same = probability_model(make_matrix({{1, 1}, {1, 1}}));
  auto e = exhaustive_bisect(same, RowSubset::all(2));
  EXPECT_EQ(e.local_h0, 0.0);
  EXPECT_EQ(e.left, (RowSubset{0}));
  EXPECT_FALSE(exhaustive_bisect_search(same, RowSubset::all(2), true));

  auto pair = probability_model(make_matrix({{3, 1}, {1, 3}, {5, 5}}));
  auto forced = exhaustive_bisect(pair, RowSubset{0, 2});
  EXPECT_EQ(forced.left, (RowSubset{0}));
  EXPECT_EQ(forced.right, (RowSubset{2}));
}

TEST(ExhaustiveBisect, TiesGoToSmallestLeftSet) {
  // Four identical rows: every bipartition scores 0; {0} is smallest.
  auto model = probability_model(
      make_matrix({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  auto e = exhaustive_bisect(model, RowSubset::all(4));
  EXPECT_EQ(e.left, (RowSubset{0}));
}

TEST(ExhaustiveBisect, SizeGuards) {
  Rows big(25, {1.0, 2.0});
  for (std::size_t i = 0; i < big.size(); ++i) big[i][0] += i;
  auto model = probability_model(make_matrix(big));
  EXPECT_EQ(error_kind([&] {
              exhaustive_bisect(model, RowSubset::all(25));
            }),
            ErrorKind::kSizeLimit);
  EXPECT_EQ(error_kind([&] { exhaustive_bisect(model, RowSubset{3}); }),
            ErrorKind::kInvalidSubset);
}

TEST(ExhaustiveBisectProperty, MatchesBitmaskBruteForce) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    const Rows values = testing::random_matrix(rng, 2, 9, 2, 6);
    const auto model = probability_model(make_matrix(values));
    const auto search =
        exhaustive_bisect_search(model, RowSubset::all(values.size()), false);
    ASSERT_TRUE(search);
    EXPECT_EQ(search->candidates_examined, bipartition_count(values.size()));
    std::vector<std::size_t> all(values.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_NEAR(search->best.local_h0,
                testing::brute_best_bisection(values, all), 1e-12);
    EXPECT_TRUE(search->best.left.contains(0));
  }
}

TEST(ExhaustiveBisectProperty, DominatesGreedy) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const Rows values = testing::random_matrix(rng, 2, 8, 2, 6);
    const auto model = probability_model(make_matrix(values));
    const auto all = RowSubset::all(values.size());
    const auto exact = exhaustive_bisect(model, all);
    for (const auto& options : {kDivisive, kFull}) {
      const auto greedy = greedy_bisect(model, all, options);
      if (greedy) {
        EXPECT_GE(exact.local_h0, greedy->local_h0 - 1e-12);
      }
    }
  }
}

TEST(ExhaustiveBisectProperty, ThreadCountDoesNotChangeWinner) {
  std::mt19937_64 rng(303);
  const auto saved = thread_limit();
  for (int trial = 0; trial < 5; ++trial) {
    const auto model =
        probability_model(make_matrix(testing::random_counts(rng, 16, 6)));
    set_thread_limit(1);
    const auto one = exhaustive_bisect(model, RowSubset::all(16));
    set_thread_limit(5);
    const auto five = exhaustive_bisect(model, RowSubset::all(16));
    EXPECT_EQ(one.left, five.left);
    EXPECT_EQ(one.local_h0, five.local_h0);
  }
  set_thread_limit(saved);
}

TEST(ExhaustivePartition, Examples) {
  auto two = probability_model(make_matrix({{2, 0}, {0, 2}}));
  auto r2 = exhaustive_partition(two, 2);
  EXPECT_EQ(r2.best_grouping.assignment(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r2.best_h0, 1.0);

  auto same = probability_model(make_matrix({{1, 2}, {1, 2}, {1, 2}}));
  auto rs = exhaustive_partition(same, 3);
  EXPECT_EQ(rs.best_grouping.groups(), 1u);
  EXPECT_EQ(rs.best_h0, 0.0);
  EXPECT_EQ(rs.candidates_examined, 5u);

  const Rows values{{3, 1}, {1, 3}, {3, 1}};
  auto three = probability_model(make_matrix(values));
  auto r3 = exhaustive_partition(three, 3);
  EXPECT_EQ(r3.best_grouping.assignment(),
            (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(r3.candidates_examined, 5u);
  EXPECT_NEAR(r3.best_h0, 0.1687, 1e-3);
  EXPECT_NEAR(r3.best_h0, testing::brute_h0(values, {0, 1, 0}), 1e-12);
}

TEST(ExhaustivePartition, Guards) {
  auto model = probability_model(make_matrix({{2, 0}, {0, 2}}));
  EXPECT_EQ(error_kind([&] { exhaustive_partition(model, 0); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(error_kind([&] { exhaustive_partition(model, 3); }),
            ErrorKind::kInvalidArgument);
  Rows big(13, {1.0, 2.0});
  for (std::size_t i = 0; i < big.size(); ++i) big[i][1] += i;
  auto big_model = probability_model(make_matrix(big));
  EXPECT_EQ(error_kind([&] { exhaustive_partition(big_model, 2); }),
            ErrorKind::kSizeLimit);
}

TEST(ExhaustivePartitionProperty, MatchesRecursiveEnumeration) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const Rows values = testing::random_matrix(rng, 1, 7, 2, 5);
    const auto model = probability_model(make_matrix(values));
    const std::size_t n = values.size();
    const std::size_t k = 1 + rng() % n;
    const auto report = exhaustive_partition(model, k);

    double best = 0;
    std::uint64_t count = 0;
    testing::for_each_partition(
        n, k, [&](const std::vector<std::size_t>& a, std::size_t) {
          ++count;
          best = std::max(best, testing::brute_h0(values, a));
        });
    std::uint64_t closed = 0;
    for (std::size_t g = 1; g <= k; ++g) closed += stirling2(n, g);
    EXPECT_EQ(report.candidates_examined, count);
    EXPECT_EQ(report.candidates_examined, closed);
    EXPECT_NEAR(report.best_h0, best, 1e-9);
    EXPECT_LE(report.best_grouping.groups(), k);
  }
}

TEST(ExhaustivePartitionProperty, FullBudgetReachesProfileClasses) {
  // Rows 0/2 and 1/3 share profiles; more groups than classes add nothing.
  const Rows values{{1, 2, 0}, {0, 3, 1}, {2, 4, 0}, {0, 6, 2}, {5, 1, 1}};
  auto model = probability_model(make_matrix(values));
  auto report = exhaustive_partition(model, 5);
  EXPECT_EQ(report.candidates_examined, bell_number(5));
  EXPECT_EQ(report.best_grouping.groups(), 3u);
  EXPECT_NEAR(report.best_h0, testing::brute_h0(values, {0, 1, 0, 1, 2}),
              1e-12);
}

TEST(VerifyGreedy, Examples) {
  auto block = verify_greedy(make_matrix(testing::block_matrix()), kDivisive);
  ASSERT_TRUE(block.gap);
  EXPECT_EQ(*block.gap, 0.0);
  EXPECT_EQ(block.best_h0, 1.0);
  EXPECT_EQ(block.candidates_examined, 7u);

  auto pair = verify_greedy(make_matrix({{2, 0}, {0, 2}}), kDivisive);
  EXPECT_EQ(*pair.gap, 0.0);

  // No greedy split counts as h0 = 0.
  auto none = verify_greedy(make_matrix({{1, 1}, {1, 1}, {1, 1}, {10, 0}}),
                            kDivisive);
  ASSERT_TRUE(none.greedy_h0);
  EXPECT_EQ(*none.greedy_h0, 0.0);
  EXPECT_EQ(none.greedy_grouping->groups(), 1u);
  EXPECT_GT(*none.gap, 0.0);
}

TEST(VerifyGreedyProperty, GapNeverNegative) {
  std::mt19937_64 rng(6);
  int equal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto report =
        verify_greedy(make_matrix(testing::random_counts(rng, 6, 5)), kFull);
    ASSERT_TRUE(report.gap);
    EXPECT_GE(*report.gap, -1e-12);
    if (*report.gap <= 1e-12) ++equal;
  }
  RecordProperty("greedy_matches_exhaustive", equal);
}

TEST(BestDendrogramCut, PicksMostInformativeCut) {
  auto d = divisive_cluster(make_matrix({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}),
                            kFull);
  EXPECT_EQ(best_dendrogram_cut(d, 1).groups(), 1u);
  EXPECT_EQ(best_dendrogram_cut(d, 2).groups(), 2u);
  EXPECT_EQ(best_dendrogram_cut(d, 3).groups(), 3u);
  EXPECT_EQ(best_dendrogram_cut(d, 7).groups(), 3u);
}

TEST(VerifyGreedyPartition, GapIsNonNegative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto values = testing::random_matrix(rng, 2, 7, 2, 5);
    const std::size_t k = 1 + rng() % values.size();
    const auto report = verify_greedy_partition(make_matrix(values), k, kFull);
    ASSERT_TRUE(report.gap);
    EXPECT_GE(*report.gap, -1e-12);
    EXPECT_LE(report.greedy_grouping->groups(), k);
    EXPECT_NEAR(*report.greedy_h0,
                transmission(probability_model(make_matrix(values)),
                             *report.greedy_grouping),
                1e-12);
  }
}

}  // namespace
}  // namespace infodiv
