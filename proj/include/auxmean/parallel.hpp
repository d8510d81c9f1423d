#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace auxmean {

// Runs body(i) for i in [0, n) on up to `threads` workers. Work is handed out
// in fixed-size chunks; each index is processed exactly once, so any output
// written per index is independent of the thread count. The first exception
// thrown by a worker is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body, std::size_t chunk = 64) {
    if (n == 0) {
        return;
    }
    const std::size_t workers = std::min<std::size_t>(std::max(1, threads), (n + chunk - 1) / chunk);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        while (true) {
            const std::size_t start = next.fetch_add(chunk);
            if (start >= n) {
                return;
            }
            const std::size_t stop = std::min(n, start + chunk);
            try {
                for (std::size_t i = start; i < stop; ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(run);
    }
    run();
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace auxmean
