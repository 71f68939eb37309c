#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace treedeck {

// Splits [0, item_count) into fixed-size blocks and applies fn to each,
// returning the per-block partial results in block order regardless of how
// many worker threads ran.  Block size is independent of the job count, so
// any reduction over the returned vector is deterministic.
template <typename Partial>
std::vector<Partial> run_blocks(long long item_count, long long block_size, int jobs,
                                const std::function<Partial(long long, long long)>& fn) {
    if (block_size < 1) block_size = 1;
    const long long blocks = item_count <= 0 ? 0 : (item_count + block_size - 1) / block_size;
    std::vector<Partial> parts(static_cast<size_t>(blocks));
    if (blocks == 0) return parts;
    if (jobs <= 1) {
        for (long long b = 0; b < blocks; ++b) {
            long long lo = b * block_size;
            long long hi = std::min(lo + block_size, item_count);
            parts[static_cast<size_t>(b)] = fn(lo, hi);
        }
        return parts;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long b = next.fetch_add(1);
            if (b >= blocks) return;
            long long lo = b * block_size;
            long long hi = std::min(lo + block_size, item_count);
            parts[static_cast<size_t>(b)] = fn(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return parts;
}

}  // namespace treedeck
