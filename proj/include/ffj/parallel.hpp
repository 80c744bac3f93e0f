#pragma once

// Minimal index-range parallelism for the verification sweeps.  Work items
// must be independent and write only to their own slots; results are then
// deterministic regardless of scheduling.  Degrades to a plain loop when
// the hardware reports a single core.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ffj {

// Calls fn(i) for every i in [begin, end) across up to max_threads workers.
// The first exception thrown by any worker is rethrown on the caller.
inline void parallel_for(int begin, int end, const std::function<void(int)>& fn,
                         int max_threads = 8) {
    if (begin >= end) return;
    const int count = end - begin;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min({workers, count, max_threads});

    if (workers <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }

    std::atomic<int> next(begin);
    std::atomic<bool> failed(false);
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= end) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ffj
