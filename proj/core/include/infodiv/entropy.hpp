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

#include "infodiv/matrix.hpp"

namespace infodiv {

/// Tolerance for the decomposition identities, in bits.
inline constexpr double kIdentityTolerance = 1e-9;

/// Shannon entropy in bits, -sum p log2 p, with 0 log 0 taken as 0.
/// Throws Error(kInvalidDistribution) when an entry is negative or
/// non-finite, or when the entries do not sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> distribution);

namespace detail {

/// shannon_entropy without validation.
double entropy_bits(std::span<const double> distribution);

/// Kullback-Leibler divergence D(p || q) in bits. Terms with p == 0 are
/// skipped; q must be positive wherever p is. Identical inputs give exactly 0.
double divergence_bits(std::span<const double> p, std::span<const double> q);

}  // namespace detail

/// Assignment of every row to one of `groups()` groups (the grouping
/// variable). Every group id in [0, groups()) is used at least once.
class Grouping {
 public:
  /// Throws Error(kInvalidGrouping) when `assignment` is empty or leaves a
  /// group id in [0, max id] unused.
  static Grouping from_assignment(std::vector<std::size_t> assignment);

  /// Group g is `subsets[g]`. Throws Error(kInvalidGrouping) unless the
  /// subsets partition [0, rows).
  static Grouping from_subsets(std::size_t rows,
                               std::span<const RowSubset> subsets);

  static Grouping single_group(std::size_t rows);

  std::size_t rows() const noexcept { return assignment_.size(); }
  std::size_t groups() const noexcept { return groups_; }
  std::size_t group_of(std::size_t row) const { return assignment_[row]; }
  const std::vector<std::size_t>& assignment() const noexcept {
    return assignment_;
  }
  RowSubset members(std::size_t group) const;
  std::vector<RowSubset> subsets() const;

  bool operator==(const Grouping&) const = default;

 private:
  Grouping(std::vector<std::size_t> assignment, std::size_t groups)
      : assignment_(std::move(assignment)), groups_(groups) {}

  std::vector<std::size_t> assignment_;
  std::size_t groups_;
};

struct GroupTerm {
  double p_g = 0.0;  // probability of the group
  double h_g = 0.0;  // entropy of the group's pooled profile, bits
};

/// Entropy decomposition of one grouping, all values in bits.
///
///   h_n    = H(n), the column marginal entropy
///   h_m    = H(m), the entropy of the group weights
///   h_joint= H(n, m)
///   h_cond = H(n | m) = sum_g p_g h_g
///   h0     = between-group information (transmission of m to n)
///
/// h_n = h0 + h_cond, h_cond = h_joint - h_m, h0 = h_n + h_m - h_joint.
struct EntropyReport {
  double h_n = 0.0;
  double h_m = 0.0;
  double h_joint = 0.0;
  double h_cond = 0.0;
  double h0 = 0.0;
  /// h0 / h_n, or 0 when h_n is 0. Auxiliary normalized form of h0.
  double h0_ratio = 0.0;
  std::vector<GroupTerm> groups;
};

struct IdentityResiduals {
  double disaggregation = 0.0;  // |h_n - (h0 + sum p_g h_g)|
  double conditional = 0.0;     // |h_cond - (h_joint - h_m)|
  double transmission = 0.0;    // |h0 - (h_n + h_m - h_joint)|
  double max() const;
};

IdentityResiduals identity_residuals(const EntropyReport& report);

/// Decomposes the model's column entropy over `grouping`. h0 is computed as
/// sum_g p_g D(profile_g || column marginal) so it is exactly 0 when every
/// group profile equals the marginal, and never negative. Builds without
/// NDEBUG verify the three identities and throw std::logic_error if any
/// residual exceeds kIdentityTolerance.
EntropyReport decompose(const ProbabilityModel& model,
                        const Grouping& grouping);

/// The between-group information h0 of `grouping`, in bits.
double transmission(const ProbabilityModel& model, const Grouping& grouping);

}  // namespace infodiv
