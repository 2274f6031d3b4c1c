#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace critgraph {

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Work items are
/// claimed dynamically; callers write results into per-index slots so the
/// merged output never depends on scheduling. The first exception thrown by
/// any item is rethrown on the calling thread.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body)
{
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back(run);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

template <typename T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& body)
{
    std::vector<T> out(count);
    parallel_for(count, jobs, [&](std::size_t i) { out[i] = body(i); });
    return out;
}

} // namespace critgraph
