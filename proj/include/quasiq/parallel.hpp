#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace quasiq {

/// Worker count, capped by the QUASIQ_THREADS environment variable.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QUASIQ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Static partition of [0, n) across workers; fn(begin, end) per chunk.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n < 1024) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::int64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& t : pool) t.join();
}

} // namespace quasiq
