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

namespace infodiv {

inline constexpr int kSignificantDigits = 12;

// Canonical number rendering used by every export:
//  * rounded to 12 significant digits, halves rounded away from zero;
//  * trailing zeros (and a bare trailing '.') removed;
//  * plain decimal when the decimal exponent is in [-5, 12), otherwise
//    `d.ddde±XX` with at least two exponent digits;
//  * zero (of either sign) renders as "0".
// Throws Error(kNonFiniteValue) for NaN and infinities.
std::string format_number(double value);

}  // namespace infodiv
