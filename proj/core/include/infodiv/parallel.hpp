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

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace infodiv {

inline constexpr std::string_view kThreadsEnvVar = "INFODIV_THREADS";

/// Parses a thread-count setting; nullopt unless it is a positive integer.
std::optional<std::size_t> parse_thread_count(std::string_view text);

/// Maximum worker threads used by the library. Until `set_thread_limit` is
/// called this reads INFODIV_THREADS once, falling back to the hardware
/// concurrency when the variable is absent or malformed.
std::size_t thread_limit();
void set_thread_limit(std::size_t threads);

/// Splits [0, count) into contiguous chunks and runs `body(begin, end)` on
/// each, on up to `thread_limit()` threads. Runs inline when `count` is
/// below `min_parallel`. The first exception thrown by any chunk is
/// rethrown after every chunk has finished.
void parallel_for(std::size_t count, std::size_t min_parallel,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace infodiv
