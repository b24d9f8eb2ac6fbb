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

#include "infodiv/error.hpp"

namespace infodiv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNegativeValue: return "NegativeValue";
    case ErrorKind::kNonFiniteValue: return "NonFiniteValue";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kZeroGrandSum: return "ZeroGrandSum";
    case ErrorKind::kZeroRow: return "ZeroRow";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInvalidSubset: return "InvalidSubset";
    case ErrorKind::kInvalidGrouping: return "InvalidGrouping";
    case ErrorKind::kInvalidDistribution: return "InvalidDistribution";
    case ErrorKind::kUndefinedCorrelation: return "UndefinedCorrelation";
    case ErrorKind::kUndefinedCosine: return "UndefinedCosine";
    case ErrorKind::kSizeLimit: return "SizeLimit";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      message_(message) {}

}  // namespace infodiv
