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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace infodiv {
namespace {

using testing::error_kind;
using testing::Rows;

TEST(BuildMatrix, ValidMatrix) {
  auto built = build_matrix({"a", "b"}, {"x", "y"}, {{2, 0}, {0, 2}});
  EXPECT_TRUE(built.dropped.empty());
  EXPECT_EQ(built.matrix.rows(), 2u);
  EXPECT_EQ(built.matrix.cols(), 2u);
  EXPECT_EQ(built.matrix.grand_sum(), 4.0);
  EXPECT_EQ(built.matrix.at(1, 1), 2.0);
  EXPECT_EQ(built.matrix.row_sum(0), 2.0);
}

TEST(BuildMatrix, Rejections) {
  EXPECT_EQ(error_kind([] { build_matrix({"a"}, {"x", "y"}, {{1, -1}}); }),
            ErrorKind::kNegativeValue);
  EXPECT_EQ(error_kind([] {
              build_matrix({"a"}, {"x"},
                           {{std::numeric_limits<double>::quiet_NaN()}});
            }),
            ErrorKind::kNonFiniteValue);
  EXPECT_EQ(error_kind([] { build_matrix({"a", "a"}, {"x"}, {{1}, {2}}); }),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(error_kind([] { build_matrix({"a"}, {"x", "x"}, {{1, 2}}); }),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(error_kind([] { build_matrix({"a", "b"}, {"x"}, {{1}, {0}}); }),
            ErrorKind::kZeroRow);
  EXPECT_EQ(error_kind([] {
              build_matrix({"a"}, {"x"}, {{0}}, ZeroRowPolicy::kDrop);
            }),
            ErrorKind::kZeroGrandSum);
  EXPECT_EQ(error_kind([] { build_matrix({"a"}, {"x", "y"}, {{1}}); }),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(error_kind([] { build_matrix({"a", "b"}, {"x"}, {{1}}); }),
            ErrorKind::kDimensionMismatch);
}

TEST(BuildMatrix, DropPolicyReportsRows) {
  auto built = build_matrix({"z", "r"}, {"x", "y"}, {{0, 0}, {1, 2}},
                            ZeroRowPolicy::kDrop);
  ASSERT_EQ(built.matrix.rows(), 1u);
  EXPECT_EQ(built.matrix.row_labels().front(), "r");
  ASSERT_EQ(built.dropped.size(), 1u);
  EXPECT_EQ(built.dropped[0], (DroppedRow{0, "z"}));
}

TEST(MakeMatrix, GeneratesPaddedLabels) {
  Rows values(11, std::vector<double>(2, 1.0));
  auto m = make_matrix(values);
  EXPECT_EQ(m.row_labels().front(), "r00");
  EXPECT_EQ(m.row_labels().back(), "r10");
  EXPECT_EQ(m.col_labels().back(), "c1");
}

TEST(CanonicalOrder, SortsRowsAndColumnsWithValues) {
  auto m = build_matrix({"b", "a"}, {"y", "x"}, {{1, 2}, {3, 4}}).matrix;
  auto c = canonical_order(m);
  EXPECT_EQ(c.row_labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(c.col_labels(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(c.to_rows(), (Rows{{4, 3}, {2, 1}}));
}

TEST(RowSubset, Validation) {
  EXPECT_EQ(error_kind([] { RowSubset(std::vector<std::size_t>{}); }),
            ErrorKind::kInvalidSubset);
  EXPECT_EQ(error_kind([] { RowSubset({1, 1}); }), ErrorKind::kInvalidSubset);
  RowSubset s({3, 1, 2});
  EXPECT_EQ(s.front(), 1u);
  EXPECT_EQ(s.back(), 3u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(error_kind([&] { s.check_bounds(3); }), ErrorKind::kInvalidSubset);
  EXPECT_EQ(s.minus(RowSubset{2}), (RowSubset{1, 3}));
  EXPECT_EQ(error_kind([&] { s.minus(RowSubset{1, 2, 3}); }),
            ErrorKind::kInvalidSubset);
  EXPECT_LT((RowSubset{0, 2}), (RowSubset{0, 3}));
  EXPECT_EQ(RowSubset::all(3), (RowSubset{0, 1, 2}));
}

TEST(ProbabilityModel, Examples) {
  auto model = probability_model(make_matrix({{2, 0}, {0, 2}}));
  EXPECT_EQ(model.joint(0, 0), 0.5);
  EXPECT_EQ(model.joint(0, 1), 0.0);
  EXPECT_EQ(model.row_marginal(), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(model.col_marginal(), (std::vector<double>{0.5, 0.5}));

  auto uniform = probability_model(make_matrix({{1, 1}, {1, 1}}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(uniform.joint(i, j), 0.25);
  }

  auto m3 = probability_model(make_matrix({{3, 1}, {1, 3}, {3, 1}}));
  EXPECT_NEAR(m3.col_marginal()[0], 7.0 / 12, 1e-15);
  EXPECT_NEAR(m3.col_marginal()[1], 5.0 / 12, 1e-15);
  for (double p : m3.row_marginal()) EXPECT_NEAR(p, 1.0 / 3, 1e-15);
}

TEST(PooledProfile, Examples) {
  auto model = probability_model(make_matrix({{2, 0}, {0, 2}}));
  auto p = pooled_profile(model, RowSubset{0});
  EXPECT_EQ(p.weight, 0.5);
  EXPECT_EQ(p.profile, (std::vector<double>{1.0, 0.0}));

  auto m3 = probability_model(make_matrix({{3, 1}, {1, 3}, {3, 1}}));
  auto q = pooled_profile(m3, RowSubset{0, 2});
  EXPECT_NEAR(q.weight, 2.0 / 3, 1e-15);
  EXPECT_EQ(q.profile, (std::vector<double>{0.75, 0.25}));

  auto all = pooled_profile(m3, RowSubset::all(3));
  EXPECT_NEAR(all.weight, 1.0, 1e-15);
  EXPECT_EQ(all.profile, m3.col_marginal());
}

TEST(ProbabilityModelProperty, MarginalsAndScaling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto values = testing::random_matrix(rng, 1, 10, 1, 8);
    auto model = probability_model(make_matrix(values));

    double total = 0;
    for (std::size_t i = 0; i < model.rows(); ++i) {
      double row = 0;
      for (std::size_t j = 0; j < model.cols(); ++j) row += model.joint(i, j);
      EXPECT_NEAR(row, model.row_marginal()[i], 1e-12);
      total += row;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (std::size_t j = 0; j < model.cols(); ++j) {
      double col = 0;
      for (std::size_t i = 0; i < model.rows(); ++i) col += model.joint(i, j);
      EXPECT_NEAR(col, model.col_marginal()[j], 1e-12);
    }

    // Full-set pooling reproduces the column marginal exactly.
    EXPECT_EQ(pooled_profile(model, RowSubset::all(model.rows())).profile,
              model.col_marginal());

    // Weights over a random partition sum to 1.
    auto assignment = testing::random_assignment(rng, model.rows());
    auto grouping = Grouping::from_assignment(assignment);
    double weight = 0;
    for (const auto& subset : grouping.subsets()) {
      auto pooled = pooled_profile(model, subset);
      weight += pooled.weight;
      double mass = 0;
      for (double p : pooled.profile) mass += p;
      EXPECT_NEAR(mass, 1.0, 1e-12);
    }
    EXPECT_NEAR(weight, 1.0, 1e-12);

    const double scale = 0.37 + trial;
    auto scaled = probability_model(
        map_values(make_matrix(values), [&](double v) { return v * scale; }));
    for (std::size_t i = 0; i < model.rows(); ++i) {
      EXPECT_NEAR(scaled.row_marginal()[i], model.row_marginal()[i], 1e-12);
      for (std::size_t j = 0; j < model.cols(); ++j) {
        EXPECT_NEAR(scaled.joint(i, j), model.joint(i, j), 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace infodiv
