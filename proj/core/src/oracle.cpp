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
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "infodiv/error.hpp"
#include "infodiv/parallel.hpp"
#include "infodiv/split_scorer.hpp"

namespace infodiv {

std::uint64_t bipartition_count(std::size_t rows) {
  if (rows < 2) return 0;
  return (std::uint64_t{1} << (rows - 1)) - 1;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

std::uint64_t bell_number(std::size_t n) {
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

namespace {

using Mask = std::uint64_t;

// Left side = first member plus members 1.. selected by the bits of `mask`.
// True when `a` is lexicographically smaller than `b` as sorted index sets.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask lowest = diff & (~diff + 1);
  const Mask above = ~((lowest << 1) - 1);
  // The set holding the lowest differing member is smaller unless the other
  // set ends there.
  const bool a_has = (a & lowest) != 0;
  const Mask other = a_has ? b : a;
  const bool other_continues = (other & above) != 0;
  return a_has ? other_continues : !other_continues;
}

void mask_to_flags(Mask mask, std::vector<char>& flags) {
  flags[0] = 1;
  for (std::size_t k = 1; k < flags.size(); ++k) {
    flags[k] = static_cast<char>((mask >> (k - 1)) & 1U);
  }
}

constexpr std::size_t kParallelCandidates = 2048;

}  // namespace

std::optional<BisectSearch> exhaustive_bisect_search(
    const ProbabilityModel& model, const RowSubset& subtree,
    bool divisive_only) {
  if (subtree.size() < 2) {
    throw Error(ErrorKind::kInvalidSubset, "bisection needs at least two rows");
  }
  if (subtree.size() > kMaxBisectRows) {
    throw Error(ErrorKind::kSizeLimit,
                "exhaustive bisection is limited to " +
                    std::to_string(kMaxBisectRows) + " rows, got " +
                    std::to_string(subtree.size()));
  }
  subtree.check_bounds(model.rows());
  const detail::SplitScorer scorer(model, subtree);
  const std::size_t n = scorer.size();
  const std::uint64_t count = bipartition_count(n);
  constexpr double kNone = -std::numeric_limits<double>::infinity();

  // Pass 1: exact maximum over admissible candidates.
  double best_value = kNone;
  std::uint64_t examined = 0;
  std::mutex mutex;
  parallel_for(count, kParallelCandidates, [&](std::size_t begin,
                                               std::size_t end) {
    std::vector<char> flags(n);
    double local_best = kNone;
    for (Mask m = begin; m < end; ++m) {
      mask_to_flags(m, flags);
      const auto s = scorer.score(flags);
      if (divisive_only && !scorer.is_divisive(s)) continue;
      local_best = std::max(local_best, s.local_h0);
    }
    std::lock_guard lock(mutex);
    best_value = std::max(best_value, local_best);
    examined += end - begin;
  });
  if (examined != count) {
    throw std::logic_error("bipartition enumeration count mismatch");
  }
  if (best_value == kNone) return std::nullopt;

  // Pass 2: lexicographically smallest left side among near-maximal ones.
  const double threshold = best_value - kCompareTolerance;
  std::optional<Mask> winner;
  parallel_for(count, kParallelCandidates, [&](std::size_t begin,
                                               std::size_t end) {
    std::vector<char> flags(n);
    std::optional<Mask> local;
    for (Mask m = begin; m < end; ++m) {
      mask_to_flags(m, flags);
      const auto s = scorer.score(flags);
      if (divisive_only && !scorer.is_divisive(s)) continue;
      if (s.local_h0 >= threshold && (!local || lex_less(m, *local))) local = m;
    }
    if (!local) return;
    std::lock_guard lock(mutex);
    if (!winner || lex_less(*local, *winner)) winner = local;
  });

  std::vector<char> flags(n);
  mask_to_flags(*winner, flags);
  return BisectSearch{scorer.evaluation(flags), count};
}

SplitEvaluation exhaustive_bisect(const ProbabilityModel& model,
                                  const RowSubset& subtree) {
  return exhaustive_bisect_search(model, subtree, false)->best;
}

std::optional<SplitEvaluation> exhaustive_bisector(
    const ProbabilityModel& model, const RowSubset& subtree,
    const ClusterOptions& options) {
  auto found = exhaustive_bisect_search(
      model, subtree, options.stop_rule == StopRule::kDivisiveOnly);
  if (!found) return std::nullopt;
  return std::move(found->best);
}

namespace {

// Visits restricted-growth strings a[0..n) with a[0] = 0 and
// a[i] <= min(max(a[0..i)) + 1, max_groups - 1), in lexicographic order.
template <typename Visit>
std::uint64_t for_each_rgs(std::size_t n, std::size_t max_groups,
                           Visit&& visit) {
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of a[0..i]
  std::uint64_t visited = 0;
  while (true) {
    visit(a, prefix_max[n - 1] + 1);
    ++visited;
    std::size_t i = n - 1;
    while (i > 0) {
      const std::size_t limit = std::min(prefix_max[i - 1] + 1, max_groups - 1);
      if (a[i] < limit) break;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      a[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return visited;
}

class PartitionScorer {
 public:
  explicit PartitionScorer(const ProbabilityModel& model, std::size_t groups)
      : model_(model),
        sums_(groups * model.cols()),
        totals_(groups),
        profile_(model.cols()) {}

  double h0(const std::vector<std::size_t>& assignment, std::size_t groups) {
    const std::size_t cols = model_.cols();
    std::fill(sums_.begin(), sums_.begin() + groups * cols, 0.0);
    std::fill(totals_.begin(), totals_.begin() + groups, 0.0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      auto row = model_.counts(i);
      double* sums = sums_.data() + assignment[i] * cols;
      for (std::size_t j = 0; j < cols; ++j) sums[j] += row[j];
      totals_[assignment[i]] += model_.row_total(i);
    }
    double h0 = 0.0;
    for (std::size_t g = 0; g < groups; ++g) {
      for (std::size_t j = 0; j < cols; ++j) {
        profile_[j] = sums_[g * cols + j] / totals_[g];
      }
      h0 += (totals_[g] / model_.grand_sum()) *
            detail::divergence_bits(profile_, model_.col_marginal());
    }
    return std::max(h0, 0.0);
  }

 private:
  const ProbabilityModel& model_;
  std::vector<double> sums_;
  std::vector<double> totals_;
  std::vector<double> profile_;
};

}  // namespace

OracleReport exhaustive_partition(const ProbabilityModel& model,
                                  std::size_t max_groups) {
  const std::size_t n = model.rows();
  if (n > kMaxPartitionRows) {
    throw Error(ErrorKind::kSizeLimit,
                "exhaustive partition search is limited to " +
                    std::to_string(kMaxPartitionRows) + " rows, got " +
                    std::to_string(n));
  }
  if (max_groups < 1 || max_groups > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "max_groups must be in [1, " + std::to_string(n) + "]");
  }

  PartitionScorer scorer(model, max_groups);
  double best = 0.0;
  const std::uint64_t visited = for_each_rgs(
      n, max_groups, [&](const auto& a, std::size_t groups) {
        best = std::max(best, scorer.h0(a, groups));
      });
  std::uint64_t expected = 0;
  for (std::size_t k = 1; k <= max_groups; ++k) expected += stirling2(n, k);
  if (visited != expected) {
    throw std::logic_error("set partition enumeration count mismatch");
  }

  const double threshold = best - kCompareTolerance;
  std::vector<std::size_t> winner;
  std::size_t winner_groups = 0;
  for_each_rgs(n, max_groups, [&](const auto& a, std::size_t groups) {
    if (!winner.empty() && groups >= winner_groups) return;
    if (scorer.h0(a, groups) >= threshold) {
      winner = a;
      winner_groups = groups;
    }
  });

  auto grouping = Grouping::from_assignment(std::move(winner));
  const double h0 = transmission(model, grouping);
  OracleReport report{std::move(grouping)};
  report.best_h0 = h0;
  report.candidates_examined = visited;
  return report;
}

OracleReport verify_greedy(const LabeledMatrix& matrix,
                           const ClusterOptions& options) {
  const ProbabilityModel model(matrix);
  const auto all = RowSubset::all(model.rows());
  auto exact = exhaustive_bisect_search(model, all, false);
  const auto greedy = greedy_bisect(model, all, options);

  const std::vector<RowSubset> best_sides{exact->best.left, exact->best.right};
  OracleReport report{Grouping::from_subsets(model.rows(), best_sides)};
  report.best_h0 = exact->best.local_h0;
  report.candidates_examined = exact->candidates_examined;
  if (greedy) {
    const std::vector<RowSubset> sides{greedy->left, greedy->right};
    report.greedy_grouping = Grouping::from_subsets(model.rows(), sides);
    report.greedy_h0 = greedy->local_h0;
  } else {
    report.greedy_grouping = Grouping::single_group(model.rows());
    report.greedy_h0 = 0.0;
  }
  report.gap = report.best_h0 - *report.greedy_h0;
  return report;
}

Grouping best_dendrogram_cut(const Dendrogram& dendrogram,
                             std::size_t max_groups) {
  if (max_groups < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_groups must be >= 1");
  }
  const std::size_t budget = max_groups - 1;  // splits allowed
  const auto& nodes = dendrogram.nodes;
  // value[id][k]: most information from at most k splits inside node id;
  // left_share[id][k]: splits given to the left child when id is split.
  std::vector<std::vector<double>> value(nodes.size(),
                                         std::vector<double>(budget + 1, 0.0));
  std::vector<std::vector<std::size_t>> left_share(
      nodes.size(), std::vector<std::size_t>(budget + 1, 0));
  for (std::size_t id = nodes.size(); id-- > 0;) {
    const auto& node = nodes[id];
    if (node.is_leaf()) continue;
    const auto [l, r] = *node.children;
    for (std::size_t k = 1; k <= budget; ++k) {
      double best = -1.0;
      for (std::size_t a = 0; a < k; ++a) {
        const double v = value[l][a] + value[r][k - 1 - a];
        if (v > best + kCompareTolerance) {
          best = v;
          left_share[id][k] = a;
        }
      }
      value[id][k] = node.split->global_delta + best;
    }
  }

  std::vector<RowSubset> groups;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, budget}};
  while (!stack.empty()) {
    const auto [id, k] = stack.back();
    stack.pop_back();
    const auto& node = nodes[id];
    if (node.is_leaf() || k == 0) {
      groups.push_back(node.members);
      continue;
    }
    const auto [l, r] = *node.children;
    const std::size_t a = left_share[id][k];
    stack.push_back({r, k - 1 - a});
    stack.push_back({l, a});
  }
  return Grouping::from_subsets(dendrogram.labels.size(), groups);
}

OracleReport verify_greedy_partition(const LabeledMatrix& matrix,
                                     std::size_t max_groups,
                                     const ClusterOptions& options) {
  const ProbabilityModel model(matrix);
  auto report = exhaustive_partition(model, max_groups);
  auto greedy = best_dendrogram_cut(divisive_cluster(matrix, options),
                                    max_groups);
  report.greedy_h0 = transmission(model, greedy);
  report.greedy_grouping = std::move(greedy);
  report.gap = report.best_h0 - *report.greedy_h0;
  return report;
}

}  // namespace infodiv
