#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace corravg::detail {

// Worker budget: CORRAVG_THREADS caps std::thread::hardware_concurrency().
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CORRAVG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = std::min<long>(hw, v);
    }
    return hw;
}

// Runs fn(begin, end) over a chunked partition of [0, total).  Results must
// be written to disjoint slots indexed by the loop variable so the merge is
// deterministic regardless of thread count.
template <typename Fn>
void parallel_for(std::int64_t total, Fn&& fn) {
    unsigned workers = worker_count();
    if (total <= 0) return;
    if (workers <= 1 || total < 2) {
        fn(std::int64_t{0}, total);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, total));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::int64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::int64_t begin = w * chunk;
        std::int64_t end = std::min<std::int64_t>(begin + chunk, total);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace corravg::detail
