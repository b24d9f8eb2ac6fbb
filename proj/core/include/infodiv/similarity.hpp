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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodiv/matrix.hpp"

namespace infodiv {

/// Pearson product-moment correlation, clamped to [-1, 1].
/// Throws Error(kDimensionMismatch) for unequal lengths or fewer than two
/// entries, Error(kUndefinedCorrelation) when either vector is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Salton's cosine: sum xy / sqrt(sum x^2 * sum y^2). Coordinates that are
/// zero in both vectors do not change it. Throws Error(kDimensionMismatch)
/// for unequal or zero lengths, Error(kUndefinedCosine) for a zero vector.
double cosine(std::span<const double> x, std::span<const double> y);

/// Every cell x becomes log2(1 + x): zero stays zero, order is preserved.
LabeledMatrix log_transform(const LabeledMatrix& matrix);

enum class Measure { kPearson, kCosine };
enum class DiagonalMode {
  kInclude,  // diagonal cells are ordinary data
  kMissing,  // for pair (i, j), positions i and j are dropped from both rows
};
enum class Transform { kNone, kLog };

std::string_view to_string(Measure measure);
std::string_view to_string(DiagonalMode mode);
std::string_view to_string(Transform transform);

struct SimilarityMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;  // symmetric, unit diagonal
  Measure measure = Measure::kPearson;
  DiagonalMode diagonal_mode = DiagonalMode::kInclude;
  Transform transform = Transform::kNone;
};

/// Pairwise similarity of the rows of a square matrix whose row and column
/// labels are equal, in order. The transform is applied first. Per-pair
/// measure errors are rethrown with the pair's labels in the message.
SimilarityMatrix similarity_matrix(const LabeledMatrix& matrix,
                                   Measure measure,
                                   DiagonalMode diagonal_mode,
                                   Transform transform);

}  // namespace infodiv
