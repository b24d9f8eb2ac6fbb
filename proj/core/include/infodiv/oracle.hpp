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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "infodiv/clustering.hpp"
#include "infodiv/entropy.hpp"
#include "infodiv/matrix.hpp"

namespace infodiv {

// Hard size guards; exceeding them is an error, never a silent truncation.
inline constexpr std::size_t kMaxBisectRows = 24;
inline constexpr std::size_t kMaxPartitionRows = 12;

/// 2^(n-1) - 1, the number of unordered nontrivial bipartitions of n rows.
std::uint64_t bipartition_count(std::size_t rows);
/// Stirling number of the second kind S(n, k).
std::uint64_t stirling2(std::size_t n, std::size_t k);
/// Bell number B(n).
std::uint64_t bell_number(std::size_t n);

struct BisectSearch {
  SplitEvaluation best;
  std::uint64_t candidates_examined = 0;
};

/// Every nontrivial bipartition of `subtree`, scored exactly like
/// `evaluate_bipartition`. The winner maximizes local_h0; among scores within
/// kCompareTolerance of the maximum the lexicographically smallest left side
/// containing the subtree's first row wins. With `divisive_only`, only
/// divisive bipartitions compete and the result is nullopt if there are none.
/// Throws Error(kInvalidSubset) below 2 rows and Error(kSizeLimit) above
/// kMaxBisectRows.
std::optional<BisectSearch> exhaustive_bisect_search(
    const ProbabilityModel& model, const RowSubset& subtree,
    bool divisive_only);

/// Unrestricted exhaustive bisection.
SplitEvaluation exhaustive_bisect(const ProbabilityModel& model,
                                  const RowSubset& subtree);

/// Bisector adapter for `divisive_cluster`: honors the stop rule by
/// restricting the search to divisive bipartitions under kDivisiveOnly.
std::optional<SplitEvaluation> exhaustive_bisector(
    const ProbabilityModel& model, const RowSubset& subtree,
    const ClusterOptions& options);

struct OracleReport {
  Grouping best_grouping;
  double best_h0 = 0.0;
  std::uint64_t candidates_examined = 0;
  std::optional<Grouping> greedy_grouping{};
  std::optional<double> greedy_h0{};
  std::optional<double> gap{};  // best_h0 - greedy_h0, >= -kCompareTolerance
};

/// Enumerates every set partition of the rows into at most `max_groups`
/// nonempty groups (restricted-growth strings) and returns the one with the
/// largest h0. Ties within kCompareTolerance go to fewer groups, then to the
/// earliest restricted-growth string. The enumerated count is checked
/// against sum_k S(n, k). Throws Error(kSizeLimit) above kMaxPartitionRows
/// and Error(kInvalidArgument) unless 1 <= max_groups <= rows.
OracleReport exhaustive_partition(const ProbabilityModel& model,
                                  std::size_t max_groups);

/// Greedy versus exhaustive bisection at the root of `matrix`. A greedy
/// no-split counts as h0 = 0.
OracleReport verify_greedy(const LabeledMatrix& matrix,
                           const ClusterOptions& options);

/// The grouping with at most `max_groups` groups obtainable by cutting
/// `dendrogram` that carries the most information (largest sum of split
/// deltas). Ties prefer fewer splits, then the left subtree.
Grouping best_dendrogram_cut(const Dendrogram& dendrogram,
                             std::size_t max_groups);

/// exhaustive_partition plus the greedy dendrogram's best cut with the same
/// group budget, and the gap between them.
OracleReport verify_greedy_partition(const LabeledMatrix& matrix,
                                     std::size_t max_groups,
                                     const ClusterOptions& options);

}  // namespace infodiv
