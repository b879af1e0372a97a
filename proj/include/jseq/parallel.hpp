#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace jseq {

// Runs fn(i) for every i in [lo, hi] across up to `jobs` threads. Callers index
// pre-sized output slots by i, so aggregation stays deterministic regardless of
// scheduling.
inline void parallel_for(long lo, long hi, int jobs, const std::function<void(long)>& fn) {
    if (hi < lo) return;
    long count = hi - lo + 1;
    int wanted = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (wanted < 1) wanted = 1;
    if (wanted == 1 || count == 1) {
        for (long i = lo; i <= hi; ++i) fn(i);
        return;
    }
    std::atomic<long> next(lo);
    auto worker = [&]() {
        while (true) {
            long i = next.fetch_add(1);
            if (i > hi) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<long>(wanted, count));
    pool.reserve(static_cast<size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace jseq
