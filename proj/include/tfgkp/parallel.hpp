// Copyright 2026 The tfgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tfgkp {

/// Thread count used when callers pass 0: TFGKP_THREADS if set and positive,
/// otherwise the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char *env = std::getenv("TFGKP_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks and runs body(begin, end, worker) on
/// up to `threads` workers. Chunk boundaries depend only on n and the worker
/// count, so results that are combined per index are schedule independent.
/// The first exception thrown by a worker is rethrown on the caller.
inline void parallel_for_chunks(std::size_t n, unsigned threads,
                                const std::function<void(std::size_t, std::size_t, unsigned)> &body) {
    if (n == 0) return;
    if (threads == 0) threads = default_thread_count();
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (workers <= 1) {
        body(0, n, 0);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
}

}  // namespace tfgkp
