#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace subord {

// Worker count for data-parallel scans: SUBORD_THREADS when set (clamped to
// [1, 64]), otherwise the hardware concurrency. Results never depend on the
// value; it only changes wall time.
inline int worker_count() {
    if (const char* env = std::getenv("SUBORD_THREADS")) {
        try {
            const int n = std::stoi(env);
            return std::clamp(n, 1, 64);
        } catch (...) {
            return 1;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

// Runs body(first, last) over a partition of [0, n). body must only write to
// disjoint, index-addressed state so the partition cannot affect results.
template <class Body>
void parallel_chunks(long n, int threads, Body&& body) {
    if (n <= 0) return;
    const long workers = std::max(1L, std::min<long>(threads, n));
    if (workers == 1) {
        body(0L, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long chunk = (n + workers - 1) / workers;
    for (long w = 0; w < workers; ++w) {
        const long first = w * chunk;
        const long last = std::min(n, first + chunk);
        if (first >= last) break;
        pool.emplace_back([&body, first, last] { body(first, last); });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace subord
