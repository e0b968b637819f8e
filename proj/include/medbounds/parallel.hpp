#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace medbounds {

/// Worker count: explicit request > MEDBOUNDS_THREADS > hardware concurrency.
inline int default_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MEDBOUNDS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, n) over static contiguous chunks. Results must be
/// written to per-index slots; with that discipline output is identical for
/// any thread count. The first exception thrown by any chunk is rethrown.
template <class F>
void parallel_for(std::int64_t n, int threads, F&& body) {
    if (n <= 0) return;
    threads = std::clamp<std::int64_t>(threads, 1, n);
    if (threads == 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t begin = t * chunk;
        const std::int64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::int64_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& worker : pool) worker.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace medbounds
