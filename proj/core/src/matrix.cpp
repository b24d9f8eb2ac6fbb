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

#include "infodiv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "infodiv/error.hpp"

namespace infodiv {

struct MatrixAccess {
  static LabeledMatrix make(std::vector<std::string> row_labels,
                            std::vector<std::string> col_labels,
                            std::vector<double> values) {
    LabeledMatrix m;
    m.row_labels_ = std::move(row_labels);
    m.col_labels_ = std::move(col_labels);
    m.values_ = std::move(values);
    const std::size_t cols = m.col_labels_.size();
    m.row_sums_.assign(m.row_labels_.size(), 0.0);
    for (std::size_t i = 0; i < m.row_labels_.size(); ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < cols; ++j) sum += m.values_[i * cols + j];
      m.row_sums_[i] = sum;
      m.grand_sum_ += sum;
    }
    return m;
  }
};

namespace {

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::kDuplicateLabel,
                  std::string("duplicate ") + axis + " label '" + label + "'");
    }
  }
}

std::vector<std::size_t> sorted_order(const std::vector<std::string>& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return labels[a] < labels[b];
                   });
  return order;
}

}  // namespace

std::vector<std::vector<double>> LabeledMatrix::to_rows() const {
  std::vector<std::vector<double>> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

MatrixBuild build_matrix(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels,
                         const std::vector<std::vector<double>>& values,
                         ZeroRowPolicy policy) {
  if (values.size() != row_labels.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(row_labels.size()) + " row labels but " +
                    std::to_string(values.size()) + " rows of values");
  }
  if (col_labels.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix has no columns");
  }
  check_unique(row_labels, "row");
  check_unique(col_labels, "column");

  const std::size_t cols = col_labels.size();
  MatrixBuild result{MatrixAccess::make({}, {}, {}), {}};
  std::vector<std::string> kept_labels;
  std::vector<double> kept_values;
  kept_values.reserve(values.size() * cols);

  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& row = values[i];
    if (row.size() != cols) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "row " + std::to_string(i) + " ('" + row_labels[i] +
                      "') has " + std::to_string(row.size()) +
                      " values, expected " + std::to_string(cols));
    }
    bool any_positive = false;
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = row[j];
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::kNonFiniteValue,
                    "non-finite value at row " + std::to_string(i) +
                        ", column " + std::to_string(j));
      }
      if (v < 0.0) {
        throw Error(ErrorKind::kNegativeValue,
                    "negative value at row " + std::to_string(i) +
                        ", column " + std::to_string(j));
      }
      any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) {
      if (policy == ZeroRowPolicy::kReject) {
        throw Error(ErrorKind::kZeroRow, "row " + std::to_string(i) + " ('" +
                                             row_labels[i] + "') sums to zero");
      }
      result.dropped.push_back({i, row_labels[i]});
      continue;
    }
    kept_labels.push_back(std::move(row_labels[i]));
    kept_values.insert(kept_values.end(), row.begin(), row.end());
  }

  if (kept_labels.empty()) {
    throw Error(ErrorKind::kZeroGrandSum, "matrix has no positive values");
  }
  result.matrix = MatrixAccess::make(std::move(kept_labels),
                                     std::move(col_labels),
                                     std::move(kept_values));
  return result;
}

LabeledMatrix make_matrix(const std::vector<std::vector<double>>& values) {
  const std::size_t cols = values.empty() ? 0 : values.front().size();
  auto labels = [](char prefix, std::size_t n) {
    const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::string digits = std::to_string(i);
      out.push_back(prefix + std::string(width - digits.size(), '0') + digits);
    }
    return out;
  };
  return build_matrix(labels('r', values.size()), labels('c', cols), values)
      .matrix;
}

LabeledMatrix canonical_order(const LabeledMatrix& matrix) {
  const auto row_order = sorted_order(matrix.row_labels());
  const auto col_order = sorted_order(matrix.col_labels());
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> values;
  values.reserve(matrix.rows() * matrix.cols());
  for (auto j : col_order) col_labels.push_back(matrix.col_labels()[j]);
  for (auto i : row_order) {
    row_labels.push_back(matrix.row_labels()[i]);
    for (auto j : col_order) values.push_back(matrix.at(i, j));
  }
  return MatrixAccess::make(std::move(row_labels), std::move(col_labels),
                            std::move(values));
}

RowSubset::RowSubset(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty()) {
    throw Error(ErrorKind::kInvalidSubset, "row subset is empty");
  }
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorKind::kInvalidSubset, "row subset repeats an index");
  }
}

RowSubset RowSubset::all(std::size_t rows) {
  std::vector<std::size_t> indices(rows);
  std::iota(indices.begin(), indices.end(), 0);
  return RowSubset(std::move(indices));
}

bool RowSubset::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void RowSubset::check_bounds(std::size_t rows) const {
  if (indices_.back() >= rows) {
    throw Error(ErrorKind::kInvalidSubset,
                "row index " + std::to_string(indices_.back()) +
                    " out of range for " + std::to_string(rows) + " rows");
  }
}

RowSubset RowSubset::minus(const RowSubset& other) const {
  std::vector<std::size_t> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  return RowSubset(std::move(out));
}

ProbabilityModel::ProbabilityModel(const LabeledMatrix& matrix)
    : rows_(matrix.rows()),
      cols_(matrix.cols()),
      row_totals_(matrix.rows()),
      grand_sum_(matrix.grand_sum()),
      row_marginal_(matrix.rows()),
      col_marginal_(matrix.cols(), 0.0) {
  counts_.reserve(rows_ * cols_);
  std::vector<double> col_totals(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto row = matrix.row(i);
    counts_.insert(counts_.end(), row.begin(), row.end());
    for (std::size_t j = 0; j < cols_; ++j) col_totals[j] += row[j];
    row_totals_[i] = matrix.row_sum(i);
    row_marginal_[i] = row_totals_[i] / grand_sum_;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    col_marginal_[j] = col_totals[j] / grand_sum_;
  }
}

ProbabilityModel probability_model(const LabeledMatrix& matrix) {
  return ProbabilityModel(matrix);
}

std::vector<double> pooled_counts(const ProbabilityModel& model,
                                  const RowSubset& subset, double& total) {
  subset.check_bounds(model.rows());
  std::vector<double> sums(model.cols(), 0.0);
  total = 0.0;
  for (auto i : subset) {
    auto row = model.counts(i);
    for (std::size_t j = 0; j < sums.size(); ++j) sums[j] += row[j];
    total += model.row_total(i);
  }
  return sums;
}

PooledProfile pooled_profile(const ProbabilityModel& model,
                             const RowSubset& subset) {
  double total = 0.0;
  auto sums = pooled_counts(model, subset, total);
  // Rows never sum to zero, so a nonempty subset has positive weight.
  PooledProfile out;
  out.weight = total / model.grand_sum();
  out.profile = std::move(sums);
  for (auto& v : out.profile) v /= total;
  return out;
}

}  // namespace infodiv
