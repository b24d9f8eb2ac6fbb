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
#include <span>
#include <vector>

#include "infodiv/clustering.hpp"
#include "infodiv/matrix.hpp"

namespace infodiv::detail {

struct SplitScore {
  double local_h0 = 0.0;
  double h_left = 0.0;
  double h_right = 0.0;
};

/// Scores bipartitions of one fixed subtree. Both sides are pooled from
/// scratch in member order on every call, so a given bipartition always
/// gets bitwise the same score whichever search produced it.
class SplitScorer {
 public:
  SplitScorer(const ProbabilityModel& model, const RowSubset& subtree);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t member(std::size_t position) const { return members_[position]; }
  double h_aggregate() const noexcept { return h_aggregate_; }
  double weight() const noexcept { return weight_; }

  /// `in_left[k]` selects members_[k]; both sides must be nonempty.
  SplitScore score(std::span<const char> in_left) const;

  bool is_divisive(const SplitScore& s) const {
    return s.h_left < h_aggregate_ - kCompareTolerance &&
           s.h_right < h_aggregate_ - kCompareTolerance;
  }

  /// Full record for the bipartition selected by `in_left`.
  SplitEvaluation evaluation(std::span<const char> in_left) const;

 private:
  const ProbabilityModel& model_;
  std::vector<std::size_t> members_;
  std::vector<double> profile_;
  double h_aggregate_ = 0.0;
  double weight_ = 0.0;
};

}  // namespace infodiv::detail
