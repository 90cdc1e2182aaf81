#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tpx {

/// Calls fn(i) for every i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

/// Hardware concurrency, at least 1.
inline unsigned default_thread_count() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace tpx
