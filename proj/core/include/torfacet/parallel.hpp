#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace torfacet {

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

/// Runs fn(i) for i in [0, n). Callers store results per index, so the output
/// is identical for every thread count.
template <class Fn>
void parallel_for(long n, int threads, Fn&& fn) {
    if (threads <= 0) threads = hardware_threads();
    if (threads == 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next(0);
    std::exception_ptr error;
    std::atomic<bool> failed(false);
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = static_cast<int>(std::min<long>(threads, n));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace torfacet
