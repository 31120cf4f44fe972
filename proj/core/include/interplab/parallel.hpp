#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace interplab {

/// Worker count used by parallel loops: set_worker_count() if called,
/// otherwise $INTERPLAB_WORKERS, otherwise the number of hardware threads.
std::size_t worker_count();
void set_worker_count(std::size_t workers);

/// Evaluates fn(i) for i in [0, count) on up to worker_count() threads and
/// returns the results in index order, so any subsequent reduction is
/// independent of scheduling.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn) {
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> out(count);
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace interplab
