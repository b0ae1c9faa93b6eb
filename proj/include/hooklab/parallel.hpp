#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hooklab {

/// Applies f to every element of `items` on up to `jobs` threads. Results come
/// back in input order whatever order the calls finish in. The first
/// exception thrown by f is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& f)
    -> std::vector<decltype(f(items.front()))>
{
    using R = decltype(f(items.front()));
    std::vector<R> out(items.size());
    const std::size_t workers =
        std::min<std::size_t>(items.size(), static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t k = 0; k < items.size(); ++k)
            out[k] = f(items[k]);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
            try {
                out[k] = f(items[k]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = items.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace hooklab
