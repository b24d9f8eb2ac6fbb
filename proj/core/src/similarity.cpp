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

#include "infodiv/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "infodiv/error.hpp"
#include "infodiv/parallel.hpp"

namespace infodiv {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::kDimensionMismatch,
                "pearson needs two vectors of equal length >= 2");
  }
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mean_x += x[k];
    mean_y += y[k];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - mean_x;
    const double dy = y[k] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kUndefinedCorrelation,
                "correlation of a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double cosine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cosine needs two nonempty vectors of equal length");
  }
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += x[k] * y[k];
    sxx += x[k] * x[k];
    syy += y[k] * y[k];
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kUndefinedCosine, "cosine of a zero vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

LabeledMatrix log_transform(const LabeledMatrix& matrix) {
  return map_values(matrix, [](double v) { return std::log2(1.0 + v); });
}

std::string_view to_string(Measure measure) {
  return measure == Measure::kPearson ? "pearson" : "cosine";
}

std::string_view to_string(DiagonalMode mode) {
  return mode == DiagonalMode::kInclude ? "include" : "missing";
}

std::string_view to_string(Transform transform) {
  return transform == Transform::kNone ? "none" : "log";
}

namespace {

double measure_pair(Measure measure, std::span<const double> x,
                    std::span<const double> y) {
  return measure == Measure::kPearson ? pearson(x, y) : cosine(x, y);
}

}  // namespace

SimilarityMatrix similarity_matrix(const LabeledMatrix& input,
                                   Measure measure,
                                   DiagonalMode diagonal_mode,
                                   Transform transform) {
  if (input.rows() != input.cols() ||
      input.row_labels() != input.col_labels()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "similarity needs a square matrix with matching row and "
                "column labels");
  }
  const LabeledMatrix matrix =
      transform == Transform::kLog ? log_transform(input) : input;
  const std::size_t n = matrix.rows();

  SimilarityMatrix out{
      .labels = matrix.row_labels(),
      .values = std::vector<std::vector<double>>(n, std::vector<double>(n)),
      .measure = measure,
      .diagonal_mode = diagonal_mode,
      .transform = transform,
  };

  auto compute = [&](std::size_t i, std::size_t j) {
    auto xi = matrix.row(i);
    auto xj = matrix.row(j);
    if (diagonal_mode == DiagonalMode::kInclude) {
      return measure_pair(measure, xi, xj);
    }
    std::vector<double> a;
    std::vector<double> b;
    a.reserve(n);
    b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      a.push_back(xi[k]);
      b.push_back(xj[k]);
    }
    return measure_pair(measure, a, b);
  };

  parallel_for(n, 16, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        try {
          const double v = compute(i, j);
          // Self-similarity is 1 by definition once it is defined at all.
          out.values[i][j] = i == j ? 1.0 : v;
          out.values[j][i] = out.values[i][j];
        } catch (const Error& e) {
          throw Error(e.kind(), "pair ('" + out.labels[i] + "', '" +
                                    out.labels[j] + "'): " + e.message());
        }
      }
    }
  });
  return out;
}

}  // namespace infodiv
