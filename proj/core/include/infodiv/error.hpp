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

#include <stdexcept>
#include <string>
#include <string_view>

namespace infodiv {

enum class ErrorKind {
  kNegativeValue,
  kNonFiniteValue,
  kDuplicateLabel,
  kZeroGrandSum,
  kZeroRow,
  kDimensionMismatch,
  kInvalidSubset,
  kInvalidGrouping,
  kInvalidDistribution,
  kUndefinedCorrelation,
  kUndefinedCosine,
  kSizeLimit,
  kParse,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Data or validation failure. Every error the library raises for bad input
/// is an `infodiv::Error`; anything else escaping the library is a bug.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The description without the kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace infodiv
