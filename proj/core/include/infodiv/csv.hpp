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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "infodiv/matrix.hpp"
#include "infodiv/similarity.hpp"

namespace infodiv {

/// Labeled-matrix CSV:
///
///   <ignored>,col_a,col_b,...
///   row_1,2,0,...
///   row_2,0,2,...
///
/// Fields may be double-quoted ("" escapes a quote). A UTF-8 byte order
/// mark, CRLF line endings and a trailing newline are accepted; blank lines
/// are skipped. Cells are decimal numbers with optional surrounding spaces.
/// Errors are Error(kParse) or the build_matrix kinds, with the 1-based
/// line and column of the offending cell.
///
/// The result is in canonical order (rows and columns sorted by label);
/// `dropped` reports rows removed under ZeroRowPolicy::kDrop, by their
/// position in the file.
MatrixBuild parse_csv_text(std::string_view text,
                           ZeroRowPolicy policy = ZeroRowPolicy::kReject);
MatrixBuild parse_csv(const std::filesystem::path& path,
                      ZeroRowPolicy policy = ZeroRowPolicy::kReject);

/// Inverse of parse_csv_text, numbers via format_number. The corner cell is
/// left empty.
std::string write_csv(const LabeledMatrix& matrix);

/// Similarity matrix in the same CSV layout.
std::string write_csv(const SimilarityMatrix& similarity);

/// Reads a whole file; throws Error(kParse) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace infodiv
