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

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infodiv/matrix.hpp"

namespace infodiv {

/// Slack for every "strictly greater" / "strictly lower" comparison between
/// computed bit quantities.
inline constexpr double kCompareTolerance = 1e-12;

/// One bipartition of a subtree S into `left` and `right`.
///
/// Probabilities are the global joint renormalized within S, so `local_h0`
/// is the two-group transmission inside S and `global_delta` = weight(S) *
/// local_h0 is the split's contribution to the whole matrix's h0. Deltas of
/// nested splits add up (chain rule), which makes dendrogram heights exact.
struct SplitEvaluation {
  RowSubset left;
  RowSubset right;
  double h_aggregate = 0.0;  // entropy of the pooled profile of S
  double h_left = 0.0;
  double h_right = 0.0;
  double local_h0 = 0.0;
  double global_delta = 0.0;
  /// Both sides strictly lower in entropy than S. A split where only one
  /// side drops sets apart heterogeneous cases; it is not clustering.
  bool divisive = false;
};

/// Scores `left` against `subtree \ left`. Throws Error(kInvalidSubset)
/// unless `left` is a nonempty proper subset of `subtree`.
SplitEvaluation evaluate_bipartition(const ProbabilityModel& model,
                                     const RowSubset& subtree,
                                     const RowSubset& left);

enum class StopRule {
  kDivisiveOnly,  // only divisive splits are made
  kFullTree,      // any split with positive information is made
};

/// Ties always break toward the lowest row index; there is no option for it.
struct ClusterOptions {
  StopRule stop_rule = StopRule::kDivisiveOnly;
  /// A growth move must raise local_h0 by more than this (plus
  /// kCompareTolerance). Must be >= 0.
  double min_delta = 0.0;
};

/// Greedy bisection of `subtree`:
///  1. score every single-row set-aside; under kDivisiveOnly keep only the
///     divisive ones;
///  2. seed the left group with the best of them (max local_h0);
///  3. repeatedly move in the single outside row that raises local_h0 the
///     most, while the gain exceeds min_delta;
///  4. re-check the divisive flag on the grown split.
/// Returns nullopt (no split) when step 1 leaves nothing, or when the grown
/// split is not divisive under kDivisiveOnly. Throws Error(kInvalidSubset)
/// for subtrees with fewer than two rows.
std::optional<SplitEvaluation> greedy_bisect(const ProbabilityModel& model,
                                             const RowSubset& subtree,
                                             const ClusterOptions& options);

/// Strategy used at each node of `divisive_cluster`.
using Bisector = std::function<std::optional<SplitEvaluation>(
    const ProbabilityModel&, const RowSubset&, const ClusterOptions&)>;

enum class LeafReason {
  kSingleton,
  kIdenticalProfiles,  // every member has the same column profile
  kNoSplit,            // the bisector found no admissible split
  kZeroDelta,          // best split carries no information
};

struct DendrogramNode {
  RowSubset members;
  std::optional<std::size_t> parent{};
  /// Present on internal nodes; children[0] holds split->left.
  std::optional<std::array<std::size_t, 2>> children{};
  std::optional<SplitEvaluation> split{};
  std::optional<LeafReason> leaf_reason{};
  /// Sum of global_delta over the splits of this node's ancestors; the root
  /// sits at 0 and a child sits at parent.height + parent.split->global_delta.
  double height = 0.0;

  bool is_leaf() const noexcept { return !children.has_value(); }
  /// Height at which this node's own split is drawn.
  double split_height() const {
    return split ? height + split->global_delta : height;
  }
};

/// Binary split tree over the rows of a matrix. Node 0 is the root; nodes
/// are stored in preorder, left child before right.
struct Dendrogram {
  std::vector<std::string> labels;  // row labels, indexed by row
  std::vector<DendrogramNode> nodes;

  const DendrogramNode& root() const { return nodes.front(); }
  /// Largest leaf height.
  double total_height() const;
  std::vector<std::size_t> leaves() const;
};

/// Recursive bisection from the full row set. Recursion stops at singletons,
/// at nodes whose rows share one profile, when the bisector returns no
/// split, and at splits whose local_h0 is within kCompareTolerance of 0.
Dendrogram divisive_cluster(const LabeledMatrix& matrix,
                            const ClusterOptions& options = {},
                            const Bisector& bisector = greedy_bisect);

struct CutRule {
  enum class Kind { kNonDivisive, kHeight };
  Kind kind = Kind::kNonDivisive;
  double height = 0.0;

  /// Descend only through divisive splits.
  static CutRule at_nondivisive() { return {Kind::kNonDivisive, 0.0}; }
  /// Make every split whose children sit at or below `h` bits.
  static CutRule at_height(double h) { return {Kind::kHeight, h}; }
};

/// Node ids of the cut frontier, in preorder. Throws
/// Error(kInvalidArgument) for a negative height.
std::vector<std::size_t> cut_frontier(const Dendrogram& dendrogram,
                                      const CutRule& rule);

/// Members of the frontier nodes; together they partition all rows.
std::vector<RowSubset> extract_clusters(const Dendrogram& dendrogram,
                                        const CutRule& rule);

/// Structural check used after deserialization: preorder layout, children
/// partition their parent, height increments equal the parent's delta.
/// Throws Error(kInvalidArgument) describing the first violation.
void validate_dendrogram(const Dendrogram& dendrogram);

}  // namespace infodiv
