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

#include "infodiv/clustering.hpp"

namespace infodiv {

enum class RenderFormat { kText, kSvg };

/// Height at which the divisive cut line is drawn: the deepest node reached
/// from the root through divisive splits only.
double divisive_cut_height(const Dendrogram& dendrogram);

/// Draws the tree left to right with the horizontal axis linear in
/// cumulative bits (root at 0). Splits that are not divisive, and
/// everything under them, are drawn dashed; the divisive cut is a marked
/// vertical line.
///
/// text: box-drawing characters, one row per leaf, an axis in bits below.
///       Each split gets at least one column so that tiny deltas stay
///       visible. A single-leaf tree is one labeled line.
/// svg:  self-contained document with axis ticks in bits.
std::string render_dendrogram(const Dendrogram& dendrogram,
                              RenderFormat format);

}  // namespace infodiv
