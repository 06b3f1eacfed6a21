#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace netdiv {

// Worker count resolution: explicit request wins, then NETDIV_THREADS, then
// hardware concurrency.
inline unsigned resolve_threads(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NETDIV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(worker_id, begin, end) over dynamic chunks of [0, total). Results
// must be accumulated in per-worker state so the outcome is independent of
// scheduling.
inline void parallel_chunks(std::uint64_t total, unsigned threads,
                            std::uint64_t chunk,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || total <= chunk) {
        fn(0, 0, total);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::uint64_t begin = next.fetch_add(chunk);
                if (begin >= total) break;
                std::uint64_t end = begin + chunk < total ? begin + chunk : total;
                fn(w, begin, end);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace netdiv
