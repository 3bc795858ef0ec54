#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semrng {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

// Runs fn(begin, end) over disjoint contiguous ranges covering [0, n).
// Callers that write results into index-addressed slots get identical output
// for every thread count. The first exception thrown by a worker is rethrown
// after all workers have joined.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    unsigned t = resolve_threads(threads);
    if (t > n) t = static_cast<unsigned>(n);
    if (t <= 1) {
        fn(std::size_t{0}, n);
        return;
    }

    const std::size_t chunk = (n + t - 1) / t;
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (unsigned i = 0; i < t; ++i) {
        const std::size_t begin = static_cast<std::size_t>(i) * chunk;
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&fn, &error, &error_mutex, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace semrng
