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

#include <ostream>
#include <string>
#include <vector>

namespace infodiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
///
///   cluster <matrix.csv> [--mode greedy|exhaustive] [--stop divisive|full]
///           [--format json|newick|dot|text|svg] [--min-delta BITS]
///   similarity <matrix.csv> --measure pearson|cosine [--log]
///           [--diagonal include|missing]
///   entropy <matrix.csv> --groups <grouping.json>
///   oracle <matrix.csv> [--max-groups K] [--stop divisive|full]
///   render <dendrogram.json> [--format text|svg]
///
/// Every subcommand takes [--out PATH]; the matrix commands also take
/// --drop-zero-rows. Returns kExitOk, kExitUsage for command-line problems
/// (including a malformed INFODIV_THREADS), or kExitData for input and
/// validation failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace infodiv::cli
