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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace infodiv {

/// Nonnegative row x column counts with unique row and column labels.
///
/// Invariants (checked by `build_matrix`): every value is finite and >= 0,
/// no row sums to zero, and the grand sum is positive. Values are reals so
/// that transformed matrices (e.g. log-scaled counts) can be clustered.
/// Immutable once built.
class LabeledMatrix {
 public:
  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }

  double at(std::size_t row, std::size_t col) const {
    return values_[row * cols() + col];
  }
  std::span<const double> row(std::size_t row) const {
    return {values_.data() + row * cols(), cols()};
  }
  std::vector<std::vector<double>> to_rows() const;

  const std::vector<std::string>& row_labels() const noexcept {
    return row_labels_;
  }
  const std::vector<std::string>& col_labels() const noexcept {
    return col_labels_;
  }

  /// Sum of a row's values, accumulated left to right.
  double row_sum(std::size_t row) const { return row_sums_[row]; }
  /// Sum of the row sums in row order.
  double grand_sum() const noexcept { return grand_sum_; }

  bool operator==(const LabeledMatrix&) const = default;

 private:
  friend struct MatrixAccess;
  LabeledMatrix() = default;

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> values_;
  std::vector<double> row_sums_;
  double grand_sum_ = 0.0;
};

enum class ZeroRowPolicy { kReject, kDrop };

struct DroppedRow {
  std::size_t index;  // position in the input, before removal
  std::string label;
  bool operator==(const DroppedRow&) const = default;
};

struct MatrixBuild {
  LabeledMatrix matrix;
  std::vector<DroppedRow> dropped;
};

/// Validates and assembles a matrix. `values` is row-major, one inner vector
/// per row. Throws Error with kDimensionMismatch, kNegativeValue,
/// kNonFiniteValue, kDuplicateLabel, kZeroRow (reject policy) or
/// kZeroGrandSum.
MatrixBuild build_matrix(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels,
                         const std::vector<std::vector<double>>& values,
                         ZeroRowPolicy policy = ZeroRowPolicy::kReject);

/// Convenience for tests and tools: builds with the reject policy and
/// generated labels r0.., c0.. when none matter.
LabeledMatrix make_matrix(const std::vector<std::vector<double>>& values);

/// Rows and columns both sorted lexicographically (bytewise) by label.
/// Clustering ties break by row index, so this ordering is what makes
/// results independent of the order rows arrived in.
LabeledMatrix canonical_order(const LabeledMatrix& matrix);

/// Same labels, every value replaced by `fn(value)`; the result is
/// revalidated.
template <typename Fn>
LabeledMatrix map_values(const LabeledMatrix& matrix, Fn fn) {
  auto rows = matrix.to_rows();
  for (auto& row : rows) {
    for (auto& v : row) v = fn(v);
  }
  return build_matrix(matrix.row_labels(), matrix.col_labels(), rows).matrix;
}

/// An ordered, nonempty set of distinct row indices.
class RowSubset {
 public:
  /// Sorts `indices`; throws Error(kInvalidSubset) when empty or when an
  /// index repeats.
  explicit RowSubset(std::vector<std::size_t> indices);
  RowSubset(std::initializer_list<std::size_t> indices)
      : RowSubset(std::vector<std::size_t>(indices)) {}

  /// {0, 1, ..., rows - 1}.
  static RowSubset all(std::size_t rows);

  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t front() const noexcept { return indices_.front(); }
  std::size_t back() const noexcept { return indices_.back(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  bool contains(std::size_t index) const;

  /// Throws Error(kInvalidSubset) when an index is >= `rows`.
  void check_bounds(std::size_t rows) const;

  /// Members of this set that are not in `other`; throws when that is empty.
  RowSubset minus(const RowSubset& other) const;

  bool operator==(const RowSubset&) const = default;
  /// Lexicographic order on the sorted index sequences.
  auto operator<=>(const RowSubset& other) const {
    return indices_ <=> other.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

/// Joint and marginal probabilities of a matrix, normalized by its grand sum.
///
/// joint(i, j) = value(i, j) / grand_sum, row_marginal[i] = sum_j joint(i, j),
/// col_marginal[j] = sum_i joint(i, j). The raw counts are retained so that
/// pooled profiles can be formed as count ratios: rows with proportional
/// counts then produce bitwise-identical profiles.
class ProbabilityModel {
 public:
  explicit ProbabilityModel(const LabeledMatrix& matrix);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double grand_sum() const noexcept { return grand_sum_; }

  double joint(std::size_t row, std::size_t col) const {
    return counts_[row * cols_ + col] / grand_sum_;
  }
  const std::vector<double>& row_marginal() const noexcept {
    return row_marginal_;
  }
  const std::vector<double>& col_marginal() const noexcept {
    return col_marginal_;
  }

  std::span<const double> counts(std::size_t row) const {
    return {counts_.data() + row * cols_, cols_};
  }
  double row_total(std::size_t row) const { return row_totals_[row]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> counts_;
  std::vector<double> row_totals_;
  double grand_sum_;
  std::vector<double> row_marginal_;
  std::vector<double> col_marginal_;
};

ProbabilityModel probability_model(const LabeledMatrix& matrix);

/// Column distribution of a group of rows: the conditional p(column | group).
struct PooledProfile {
  double weight = 0.0;          // sum of the members' row marginals
  std::vector<double> profile;  // sums to 1
};

/// Pooled column counts of `subset`, accumulated in subset order.
/// `total` receives the sum of the members' row totals.
std::vector<double> pooled_counts(const ProbabilityModel& model,
                                  const RowSubset& subset, double& total);

PooledProfile pooled_profile(const ProbabilityModel& model,
                             const RowSubset& subset);

}  // namespace infodiv
