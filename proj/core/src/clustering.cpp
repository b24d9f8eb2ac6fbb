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

#include "infodiv/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infodiv/entropy.hpp"
#include "infodiv/error.hpp"
#include "infodiv/parallel.hpp"
#include "infodiv/split_scorer.hpp"

namespace infodiv {

namespace detail {

SplitScorer::SplitScorer(const ProbabilityModel& model,
                         const RowSubset& subtree)
    : model_(model), members_(subtree.begin(), subtree.end()) {
  double total = 0.0;
  profile_ = pooled_counts(model, subtree, total);
  for (auto& v : profile_) v /= total;
  h_aggregate_ = entropy_bits(profile_);
  weight_ = total / model.grand_sum();
}

SplitScore SplitScorer::score(std::span<const char> in_left) const {
  const std::size_t cols = model_.cols();
  std::vector<double> left(cols, 0.0);
  std::vector<double> right(cols, 0.0);
  double left_total = 0.0;
  double right_total = 0.0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const auto i = members_[k];
    auto row = model_.counts(i);
    auto& side = in_left[k] ? left : right;
    for (std::size_t j = 0; j < cols; ++j) side[j] += row[j];
    (in_left[k] ? left_total : right_total) += model_.row_total(i);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    left[j] /= left_total;
    right[j] /= right_total;
  }
  const double total = left_total + right_total;
  SplitScore s;
  s.h_left = entropy_bits(left);
  s.h_right = entropy_bits(right);
  s.local_h0 = std::max(
      0.0, (left_total / total) * divergence_bits(left, profile_) +
               (right_total / total) * divergence_bits(right, profile_));
  return s;
}

SplitEvaluation SplitScorer::evaluation(std::span<const char> in_left) const {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    (in_left[k] ? left : right).push_back(members_[k]);
  }
  const auto s = score(in_left);
  return SplitEvaluation{
      .left = RowSubset(std::move(left)),
      .right = RowSubset(std::move(right)),
      .h_aggregate = h_aggregate_,
      .h_left = s.h_left,
      .h_right = s.h_right,
      .local_h0 = s.local_h0,
      .global_delta = weight_ * s.local_h0,
      .divisive = is_divisive(s),
  };
}

}  // namespace detail

namespace {

using detail::SplitScore;
using detail::SplitScorer;

// Below this much work per scan (candidates x rows x cols) candidates are
// scored inline.
constexpr std::size_t kParallelWork = 1 << 14;

// Scores each candidate position: `base` with that one position moved left.
std::vector<SplitScore> score_moves(const SplitScorer& scorer,
                                    const std::vector<char>& base,
                                    const std::vector<std::size_t>& moves,
                                    std::size_t cols) {
  std::vector<SplitScore> scores(moves.size());
  const std::size_t work = moves.size() * scorer.size() * cols;
  const std::size_t min_parallel = work >= kParallelWork ? 2 : moves.size() + 1;
  parallel_for(moves.size(), min_parallel,
               [&](std::size_t begin, std::size_t end) {
                 std::vector<char> flags = base;
                 for (std::size_t c = begin; c < end; ++c) {
                   flags[moves[c]] = 1;
                   scores[c] = scorer.score(flags);
                   flags[moves[c]] = 0;
                 }
               });
  return scores;
}

bool has_identical_profiles(const ProbabilityModel& model,
                            const RowSubset& members) {
  const auto pooled = pooled_profile(model, members).profile;
  for (auto i : members) {
    auto row = model.counts(i);
    const double total = model.row_total(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (std::fabs(row[j] / total - pooled[j]) > kCompareTolerance) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SplitEvaluation evaluate_bipartition(const ProbabilityModel& model,
                                     const RowSubset& subtree,
                                     const RowSubset& left) {
  subtree.check_bounds(model.rows());
  if (left.size() >= subtree.size()) {
    throw Error(ErrorKind::kInvalidSubset,
                "left side must be a proper subset of the subtree");
  }
  SplitScorer scorer(model, subtree);
  std::vector<char> flags(subtree.size(), 0);
  std::size_t k = 0;
  for (auto i : left) {
    while (k < subtree.size() && scorer.member(k) < i) ++k;
    if (k == subtree.size() || scorer.member(k) != i) {
      throw Error(ErrorKind::kInvalidSubset,
                  "row " + std::to_string(i) + " is not in the subtree");
    }
    flags[k] = 1;
  }
  return scorer.evaluation(flags);
}

std::optional<SplitEvaluation> greedy_bisect(const ProbabilityModel& model,
                                             const RowSubset& subtree,
                                             const ClusterOptions& options) {
  if (subtree.size() < 2) {
    throw Error(ErrorKind::kInvalidSubset,
                "bisection needs at least two rows");
  }
  if (!(options.min_delta >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "min_delta must be >= 0");
  }
  subtree.check_bounds(model.rows());
  const SplitScorer scorer(model, subtree);
  const std::size_t n = scorer.size();
  const bool divisive_only = options.stop_rule == StopRule::kDivisiveOnly;

  // Seed: the best single-row set-aside. Positions are in row order, so
  // keeping the first maximum breaks ties toward the lowest row index.
  std::vector<char> flags(n, 0);
  std::vector<std::size_t> positions(n);
  for (std::size_t k = 0; k < n; ++k) positions[k] = k;
  const auto seeds = score_moves(scorer, flags, positions, model.cols());

  std::optional<std::size_t> seed;
  for (std::size_t k = 0; k < n; ++k) {
    if (divisive_only && !scorer.is_divisive(seeds[k])) continue;
    if (!seed || seeds[k].local_h0 > seeds[*seed].local_h0 + kCompareTolerance) {
      seed = k;
    }
  }
  if (!seed) return std::nullopt;

  flags[*seed] = 1;
  std::size_t left_size = 1;
  double current = seeds[*seed].local_h0;

  // Growth: commit the single best move per scan while it gains more than
  // min_delta. The right side is never emptied.
  while (left_size + 1 < n) {
    std::vector<std::size_t> moves;
    for (std::size_t k = 0; k < n; ++k) {
      if (!flags[k]) moves.push_back(k);
    }
    const auto scores = score_moves(scorer, flags, moves, model.cols());
    std::size_t best = 0;
    for (std::size_t c = 1; c < moves.size(); ++c) {
      if (scores[c].local_h0 > scores[best].local_h0 + kCompareTolerance) {
        best = c;
      }
    }
    if (!(scores[best].local_h0 >
          current + options.min_delta + kCompareTolerance)) {
      break;
    }
    flags[moves[best]] = 1;
    ++left_size;
    current = scores[best].local_h0;
  }

  auto split = scorer.evaluation(flags);
  if (divisive_only && !split.divisive) return std::nullopt;
  return split;
}

double Dendrogram::total_height() const {
  double h = 0.0;
  for (const auto& node : nodes) {
    if (node.is_leaf()) h = std::max(h, node.height);
  }
  return h;
}

std::vector<std::size_t> Dendrogram::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    if (nodes[id].is_leaf()) out.push_back(id);
  }
  return out;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const ProbabilityModel& model, const ClusterOptions& options,
              const Bisector& bisector, Dendrogram& out)
      : model_(model), options_(options), bisector_(bisector), out_(out) {}

  void build(RowSubset members, std::optional<std::size_t> parent,
             double height) {
    const std::size_t id = out_.nodes.size();
    out_.nodes.emplace_back(std::move(members), parent);
    out_.nodes.back().height = height;
    const RowSubset& node_members = out_.nodes[id].members;

    if (node_members.size() == 1) {
      out_.nodes[id].leaf_reason = LeafReason::kSingleton;
      return;
    }
    if (has_identical_profiles(model_, node_members)) {
      out_.nodes[id].leaf_reason = LeafReason::kIdenticalProfiles;
      return;
    }
    auto split = bisector_(model_, node_members, options_);
    if (!split) {
      out_.nodes[id].leaf_reason = LeafReason::kNoSplit;
      return;
    }
    if (split->local_h0 <= kCompareTolerance) {
      out_.nodes[id].leaf_reason = LeafReason::kZeroDelta;
      return;
    }

    const double child_height = height + split->global_delta;
    RowSubset left = split->left;
    RowSubset right = split->right;
    out_.nodes[id].split = std::move(split);

    const std::size_t left_id = out_.nodes.size();
    build(std::move(left), id, child_height);
    const std::size_t right_id = out_.nodes.size();
    build(std::move(right), id, child_height);
    out_.nodes[id].children = std::array{left_id, right_id};
  }

 private:
  const ProbabilityModel& model_;
  const ClusterOptions& options_;
  const Bisector& bisector_;
  Dendrogram& out_;
};

}  // namespace

Dendrogram divisive_cluster(const LabeledMatrix& matrix,
                            const ClusterOptions& options,
                            const Bisector& bisector) {
  if (!(options.min_delta >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "min_delta must be >= 0");
  }
  const ProbabilityModel model(matrix);
  Dendrogram out;
  out.labels = matrix.row_labels();
  TreeBuilder(model, options, bisector, out)
      .build(RowSubset::all(matrix.rows()), std::nullopt, 0.0);
  return out;
}

std::vector<std::size_t> cut_frontier(const Dendrogram& dendrogram,
                                      const CutRule& rule) {
  if (rule.kind == CutRule::Kind::kHeight && !(rule.height >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "cut height must be >= 0");
  }
  auto expand = [&](const DendrogramNode& node) {
    if (node.is_leaf()) return false;
    if (rule.kind == CutRule::Kind::kNonDivisive) return node.split->divisive;
    return node.split_height() <= rule.height + kCompareTolerance;
  };
  std::vector<std::size_t> frontier;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    const auto& node = dendrogram.nodes[id];
    if (expand(node)) {
      stack.push_back((*node.children)[1]);
      stack.push_back((*node.children)[0]);
    } else {
      frontier.push_back(id);
    }
  }
  return frontier;
}

std::vector<RowSubset> extract_clusters(const Dendrogram& dendrogram,
                                        const CutRule& rule) {
  std::vector<RowSubset> out;
  for (auto id : cut_frontier(dendrogram, rule)) {
    out.push_back(dendrogram.nodes[id].members);
  }
  return out;
}

void validate_dendrogram(const Dendrogram& d) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "invalid dendrogram: " + what);
  };
  if (d.nodes.empty()) fail("no nodes");
  const auto& root = d.nodes.front();
  if (root.parent) fail("root has a parent");
  if (root.height != 0.0) fail("root height is not 0");
  if (root.members != RowSubset::all(d.labels.size())) {
    fail("root does not cover every row exactly once");
  }

  std::vector<int> referenced(d.nodes.size(), 0);
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& node = d.nodes[id];
    const std::string where = "node " + std::to_string(id) + ": ";
    if (node.is_leaf()) {
      if (node.split) fail(where + "leaf carries a split");
      continue;
    }
    if (!node.split) fail(where + "internal node without split");
    const auto [l, r] = *node.children;
    if (l != id + 1 || r <= l || r >= d.nodes.size()) {
      fail(where + "children not in preorder");
    }
    for (auto c : {l, r}) {
      ++referenced[c];
      if (d.nodes[c].parent != id) fail(where + "child parent mismatch");
      const double expected = node.height + node.split->global_delta;
      if (std::fabs(d.nodes[c].height - expected) > kIdentityTolerance) {
        fail(where + "child height differs from parent height + delta");
      }
    }
    if (node.split->left != d.nodes[l].members ||
        node.split->right != d.nodes[r].members) {
      fail(where + "split sides differ from children");
    }
    std::vector<std::size_t> merged(d.nodes[l].members.begin(),
                                    d.nodes[l].members.end());
    merged.insert(merged.end(), d.nodes[r].members.begin(),
                  d.nodes[r].members.end());
    std::sort(merged.begin(), merged.end());
    if (!std::equal(merged.begin(), merged.end(), node.members.begin(),
                    node.members.end())) {
      fail(where + "children do not partition members");
    }
    if (node.split->global_delta < 0.0 || node.split->local_h0 < 0.0) {
      fail(where + "negative information");
    }
  }
  for (std::size_t id = 1; id < d.nodes.size(); ++id) {
    if (referenced[id] != 1) {
      fail("node " + std::to_string(id) + " is not reachable exactly once");
    }
  }
}

}  // namespace infodiv
