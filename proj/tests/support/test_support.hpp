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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "infodiv/entropy.hpp"
#include "infodiv/error.hpp"
#include "infodiv/matrix.hpp"

namespace infodiv::testing {

using Rows = std::vector<std::vector<double>>;

/// Kind of the infodiv::Error thrown by fn, or nullopt if none is thrown.
template <typename Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Rows block_matrix() {
  return {{4, 4, 0, 0}, {4, 4, 0, 0}, {0, 0, 4, 4}, {0, 0, 4, 4}};
}

/// Integer counts in [0, max_value] with no all-zero row.
inline Rows random_counts(std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols, int max_value = 9) {
  std::uniform_int_distribution<int> cell(0, max_value);
  std::uniform_int_distribution<std::size_t> pick(0, cols - 1);
  Rows out(rows, std::vector<double>(cols));
  for (auto& row : out) {
    double sum = 0;
    for (auto& v : row) {
      v = cell(rng);
      sum += v;
    }
    if (sum == 0) row[pick(rng)] = 1 + cell(rng) % max_value;
  }
  return out;
}

/// Random shape in [min, max] on both axes, then random_counts.
inline Rows random_matrix(std::mt19937_64& rng, std::size_t min_rows,
                          std::size_t max_rows, std::size_t min_cols,
                          std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> r(min_rows, max_rows);
  std::uniform_int_distribution<std::size_t> c(min_cols, max_cols);
  const std::size_t rows = r(rng);
  const std::size_t cols = c(rng);
  return random_counts(rng, rows, cols);
}

/// Assignment using every id in [0, groups) at least once.
inline std::vector<std::size_t> random_assignment(std::mt19937_64& rng,
                                                  std::size_t rows) {
  std::uniform_int_distribution<std::size_t> k(1, rows);
  const std::size_t groups = k(rng);
  std::vector<std::size_t> out(rows);
  for (std::size_t i = 0; i < rows; ++i) out[i] = i < groups ? i : 0;
  std::uniform_int_distribution<std::size_t> g(0, groups - 1);
  for (std::size_t i = groups; i < rows; ++i) out[i] = g(rng);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline double plain_entropy(const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  double h = 0;
  for (double w : weights) {
    if (w > 0) h -= (w / total) * std::log2(w / total);
  }
  return h;
}

/// H(n) + H(m) - H(n, m) straight from the aggregated (group, column)
/// count table. Shares no code with the library.
inline double brute_h0(const Rows& values,
                       const std::vector<std::size_t>& assignment) {
  std::map<std::size_t, std::vector<double>> table;
  const std::size_t cols = values.front().size();
  std::vector<double> col_totals(cols, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& row = table[assignment[i]];
    row.resize(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] += values[i][j];
      col_totals[j] += values[i][j];
    }
  }
  std::vector<double> group_totals;
  std::vector<double> cells;
  for (const auto& [g, row] : table) {
    double sum = 0;
    for (double v : row) {
      sum += v;
      cells.push_back(v);
    }
    group_totals.push_back(sum);
  }
  return plain_entropy(col_totals) + plain_entropy(group_totals) -
         plain_entropy(cells);
}

/// Calls fn(assignment, groups) for every set partition of n items into at
/// most max_groups groups, by recursive placement.
inline void for_each_partition(
    std::size_t n, std::size_t max_groups,
    const std::function<void(const std::vector<std::size_t>&, std::size_t)>&
        fn) {
  std::vector<std::size_t> a(n);
  std::function<void(std::size_t, std::size_t)> place =
      [&](std::size_t i, std::size_t used) {
        if (i == n) {
          fn(a, used);
          return;
        }
        for (std::size_t g = 0; g <= used && g < max_groups; ++g) {
          a[i] = g;
          place(i + 1, std::max(used, g + 1));
        }
      };
  place(0, 0);
}

/// Best h0 over all bipartitions of `members`, by bitmask enumeration.
inline double brute_best_bisection(const Rows& values,
                                   const std::vector<std::size_t>& members) {
  Rows sub;
  for (std::size_t i : members) sub.push_back(values[i]);
  const std::size_t n = sub.size();
  double best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; ++mask) {
    std::vector<std::size_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1U;
    best = std::max(best, brute_h0(sub, a));
  }
  return best;
}

}  // namespace infodiv::testing
