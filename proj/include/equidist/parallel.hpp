#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace equidist {

inline std::atomic<unsigned>& worker_count_slot() {
    static std::atomic<unsigned> count{0};  // 0 -> hardware concurrency
    return count;
}

inline void set_worker_count(unsigned n) { worker_count_slot().store(n); }

inline unsigned worker_count() {
    unsigned n = worker_count_slot().load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Runs fn(begin, end) over [0, total) split into fixed-size chunks. Chunk
/// boundaries depend only on `total` and `chunk`, so results assembled per
/// chunk are identical for any worker count.
inline void parallel_chunks(std::size_t total, std::size_t chunk,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    if (chunk == 0) chunk = total;
    const std::size_t nchunks = (total + chunk - 1) / chunk;
    const unsigned workers = worker_count();
    if (workers <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c * chunk, std::min(total, (c + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            fn(c * chunk, std::min(total, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, nchunks));
    pool.reserve(spawn);
    for (unsigned i = 0; i < spawn; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

}  // namespace equidist
