#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace cdlab {

/// Worker count: an explicit request wins, then the CDLAB_THREADS
/// environment variable, then the hardware concurrency, never below one.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CDLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Run fn(worker_index) on `threads` workers and join. Callers keep one
/// partial result per worker and merge in index order, which makes results
/// independent of the thread count.
template <typename Fn>
void run_workers(int threads, Fn fn) {
    if (threads <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(fn, w);
    for (auto& t : pool) t.join();
}

}  // namespace cdlab
