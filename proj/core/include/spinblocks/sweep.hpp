#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace spinblocks {

/// Evaluates fn(first), ..., fn(last) on up to `threads` workers. Results come
/// back indexed by argument, so the output does not depend on scheduling. The
/// first exception thrown by any call is rethrown.
template <class Fn>
auto sweep(int first, int last, int threads, Fn fn) -> std::vector<std::invoke_result_t<Fn&, int>> {
    using Result = std::invoke_result_t<Fn&, int>;
    const int count = std::max(0, last - first + 1);
    std::vector<Result> results(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                results[static_cast<std::size_t>(i)] = fn(first + i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int workers = std::clamp(threads, 1, std::max(1, count));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace spinblocks
