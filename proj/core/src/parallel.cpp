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

#include "infodiv/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace infodiv {
namespace {

std::atomic<std::size_t> g_thread_limit{0};

std::size_t default_thread_limit() {
  if (const char* env = std::getenv(kThreadsEnvVar.data())) {
    if (auto parsed = parse_thread_count(env)) return *parsed;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace

std::optional<std::size_t> parse_thread_count(std::string_view text) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value == 0) return std::nullopt;
  return value;
}

std::size_t thread_limit() {
  std::size_t current = g_thread_limit.load(std::memory_order_relaxed);
  if (current == 0) {
    current = default_thread_limit();
    std::size_t expected = 0;
    g_thread_limit.compare_exchange_strong(expected, current);
    current = g_thread_limit.load(std::memory_order_relaxed);
  }
  return current;
}

void set_thread_limit(std::size_t threads) {
  g_thread_limit.store(std::max<std::size_t>(1, threads));
}

void parallel_for(std::size_t count, std::size_t min_parallel,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers = std::min(thread_limit(), count);
  if (workers <= 1 || count < min_parallel) {
    body(0, count);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run_chunk = [&](std::size_t begin, std::size_t end) {
    try {
      body(begin, end);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const std::size_t chunk = (count + workers - 1) / workers;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t begin = chunk; begin < count; begin += chunk) {
      threads.emplace_back(run_chunk, begin, std::min(count, begin + chunk));
    }
    run_chunk(0, std::min(count, chunk));
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace infodiv
