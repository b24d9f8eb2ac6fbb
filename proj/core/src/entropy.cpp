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

#include "infodiv/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "infodiv/error.hpp"

namespace infodiv {

namespace detail {

double entropy_bits(std::span<const double> distribution) {
  double h = 0.0;
  for (double p : distribution) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h > 0.0 ? h : 0.0;
}

double divergence_bits(std::span<const double> p, std::span<const double> q) {
  double d = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] > 0.0) d += p[j] * std::log2(p[j] / q[j]);
  }
  return d;
}

}  // namespace detail

double shannon_entropy(std::span<const double> distribution) {
  if (distribution.empty()) {
    throw Error(ErrorKind::kInvalidDistribution, "empty distribution");
  }
  double sum = 0.0;
  for (double p : distribution) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::kInvalidDistribution,
                  "probabilities must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::kInvalidDistribution,
                "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
  return detail::entropy_bits(distribution);
}

Grouping Grouping::from_assignment(std::vector<std::size_t> assignment) {
  if (assignment.empty()) {
    throw Error(ErrorKind::kInvalidGrouping, "grouping covers no rows");
  }
  const std::size_t groups =
      *std::max_element(assignment.begin(), assignment.end()) + 1;
  if (groups > assignment.size()) {
    throw Error(ErrorKind::kInvalidGrouping,
                "group ids must be dense in [0, groups)");
  }
  std::vector<bool> used(groups, false);
  for (auto g : assignment) used[g] = true;
  for (std::size_t g = 0; g < groups; ++g) {
    if (!used[g]) {
      throw Error(ErrorKind::kInvalidGrouping,
                  "group " + std::to_string(g) + " has no members");
    }
  }
  return Grouping(std::move(assignment), groups);
}

Grouping Grouping::from_subsets(std::size_t rows,
                                std::span<const RowSubset> subsets) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(rows, kUnassigned);
  for (std::size_t g = 0; g < subsets.size(); ++g) {
    for (auto i : subsets[g]) {
      if (i >= rows) {
        throw Error(ErrorKind::kInvalidGrouping,
                    "row " + std::to_string(i) + " out of range");
      }
      if (assignment[i] != kUnassigned) {
        throw Error(ErrorKind::kInvalidGrouping,
                    "row " + std::to_string(i) + " assigned twice");
      }
      assignment[i] = g;
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (assignment[i] == kUnassigned) {
      throw Error(ErrorKind::kInvalidGrouping,
                  "row " + std::to_string(i) + " not assigned");
    }
  }
  return from_assignment(std::move(assignment));
}

Grouping Grouping::single_group(std::size_t rows) {
  return from_assignment(std::vector<std::size_t>(rows, 0));
}

RowSubset Grouping::members(std::size_t group) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == group) out.push_back(i);
  }
  return RowSubset(std::move(out));
}

std::vector<RowSubset> Grouping::subsets() const {
  std::vector<std::vector<std::size_t>> buckets(groups_);
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    buckets[assignment_[i]].push_back(i);
  }
  std::vector<RowSubset> out;
  out.reserve(groups_);
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

double IdentityResiduals::max() const {
  return std::max({disaggregation, conditional, transmission});
}

IdentityResiduals identity_residuals(const EntropyReport& r) {
  double within = 0.0;
  for (const auto& g : r.groups) within += g.p_g * g.h_g;
  return {
      std::fabs(r.h_n - (r.h0 + within)),
      std::fabs(r.h_cond - (r.h_joint - r.h_m)),
      std::fabs(r.h0 - (r.h_n + r.h_m - r.h_joint)),
  };
}

EntropyReport decompose(const ProbabilityModel& model,
                        const Grouping& grouping) {
  if (grouping.rows() != model.rows()) {
    throw Error(ErrorKind::kInvalidGrouping,
                "grouping covers " + std::to_string(grouping.rows()) +
                    " rows, model has " + std::to_string(model.rows()));
  }
  const std::size_t cols = model.cols();
  const std::size_t groups = grouping.groups();

  // Pooled counts per group, accumulated in row order.
  std::vector<std::vector<double>> sums(groups, std::vector<double>(cols, 0.0));
  std::vector<double> totals(groups, 0.0);
  for (std::size_t i = 0; i < model.rows(); ++i) {
    const auto g = grouping.group_of(i);
    auto row = model.counts(i);
    for (std::size_t j = 0; j < cols; ++j) sums[g][j] += row[j];
    totals[g] += model.row_total(i);
  }

  const double grand = model.grand_sum();
  const auto& marginal = model.col_marginal();

  EntropyReport report;
  report.groups.resize(groups);
  std::vector<double> weights(groups);
  std::vector<double> joint;
  joint.reserve(groups * cols);
  std::vector<double> profile(cols);
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t j = 0; j < cols; ++j) {
      profile[j] = sums[g][j] / totals[g];
      joint.push_back(sums[g][j] / grand);
    }
    weights[g] = totals[g] / grand;
    report.groups[g] = {weights[g], detail::entropy_bits(profile)};
    report.h0 += weights[g] * detail::divergence_bits(profile, marginal);
    report.h_cond += weights[g] * report.groups[g].h_g;
  }
  report.h0 = std::max(report.h0, 0.0);
  report.h_n = detail::entropy_bits(marginal);
  report.h_m = detail::entropy_bits(weights);
  report.h_joint = detail::entropy_bits(joint);
  report.h0_ratio = report.h_n > 0.0 ? report.h0 / report.h_n : 0.0;

#ifndef NDEBUG
  if (const auto res = identity_residuals(report);
      res.max() > kIdentityTolerance) {
    throw std::logic_error("entropy decomposition identity violated by " +
                           std::to_string(res.max()) + " bits");
  }
#endif
  return report;
}

double transmission(const ProbabilityModel& model, const Grouping& grouping) {
  return decompose(model, grouping).h0;
}

}  // namespace infodiv
