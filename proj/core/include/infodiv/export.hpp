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

#include <string>
#include <string_view>
#include <vector>

#include "infodiv/clustering.hpp"
#include "infodiv/entropy.hpp"
#include "infodiv/oracle.hpp"

namespace infodiv {

enum class ExportFormat { kJson, kNewick, kDot };

/// Canonical text form of a dendrogram.
///
/// json:   {"format", "labels", "nodes", "total_height", "version"}; one
///         record per node in preorder with children ids, members (sorted
///         labels), height, parent, and either the split fields
///         (divisive, global_delta, h_aggregate, h_left, h_right, local_h0)
///         or leaf_reason. Keys sorted, 2-space indent, numbers through
///         format_number, trailing newline.
/// newick: branch length from a node to each child is the node's
///         global_delta; multi-row leaves become a zero-length fan.
/// dot:    one graph node per dendrogram node, edges labeled with the
///         parent's global_delta, edges under non-divisive splits dashed.
std::string export_dendrogram(const Dendrogram& dendrogram,
                              ExportFormat format);

/// Reads the json form back. Throws Error(kParse) for malformed documents
/// and Error(kInvalidArgument) for structurally invalid trees.
Dendrogram parse_dendrogram_json(std::string_view text);

std::string_view to_string(LeafReason reason);

/// EntropyReport as canonical JSON; `group_names` and `group_members` label
/// the groups in report order.
std::string entropy_report_json(
    const EntropyReport& report, const std::vector<std::string>& group_names,
    const std::vector<std::vector<std::string>>& group_members);

/// OracleReport as canonical JSON with groups written as sorted label lists.
std::string oracle_report_json(const OracleReport& report,
                               const std::vector<std::string>& labels,
                               std::string_view search,
                               std::size_t max_groups);

}  // namespace infodiv
