#ifndef CARLITZ_PARALLEL_HPP
#define CARLITZ_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace carlitz {

// Runs fn(begin, end, slot) over a partition of [0, n) into contiguous
// chunks, one slot per worker.  Callers combine the slots in index order, so
// results do not depend on the worker count (all reductions here are exact
// and associative).
inline void parallel_chunks(std::uint64_t n, unsigned threads,
                            const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    if (threads <= 1 || n < 2 * threads) {
        fn(0, n, 0);
        return;
    }
    const std::uint64_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    unsigned slot = 0;
    for (std::uint64_t begin = 0; begin < n; begin += chunk, ++slot) {
        const std::uint64_t end = std::min(n, begin + chunk);
        pool.emplace_back([=, &fn] { fn(begin, end, slot); });
    }
    for (auto& th : pool) th.join();
}

inline unsigned parallel_slot_count(std::uint64_t n, unsigned threads) {
    if (threads <= 1 || n < 2 * threads) return 1;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    return static_cast<unsigned>((n + chunk - 1) / chunk);
}

}  // namespace carlitz

#endif
