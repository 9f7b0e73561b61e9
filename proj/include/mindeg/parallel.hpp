#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace mindeg {

inline int default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

// Splits [0, n) into contiguous chunks, one per worker; f(begin, end, worker).
// Chunk boundaries depend only on (n, threads), so per-worker outputs
// concatenated in worker order are deterministic.
template <class F>
void parallel_for(int n, int threads, F&& f) {
    threads = std::max(1, std::min(threads, n));
    if (threads <= 1) {
        if (n > 0) f(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        int b = static_cast<int>(static_cast<long long>(n) * t / threads);
        int e = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
        pool.emplace_back([&f, b, e, t] { f(b, e, t); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace mindeg
