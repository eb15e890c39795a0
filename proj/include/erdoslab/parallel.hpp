#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace erdoslab {

struct ChunkRange {
    uint64_t index;  // position in the fixed chunk grid
    uint64_t lo;     // inclusive
    uint64_t hi;     // inclusive
};

inline uint64_t chunk_count(uint64_t lo, uint64_t hi, uint64_t chunk_size) {
    return (hi - lo) / chunk_size + 1;
}

// Runs fn over fixed-size chunks of [lo, hi]. The chunk grid depends only
// on chunk_size, never on the worker count, so per-chunk outputs merged in
// index order are identical for any number of workers. fn must write only
// to its own chunk's slot. The first exception thrown by any worker is
// rethrown on the calling thread.
template <typename Fn>
void for_each_chunk(uint64_t lo, uint64_t hi, uint64_t chunk_size, unsigned workers, Fn&& fn) {
    if (hi < lo) return;
    const uint64_t chunks = chunk_count(lo, hi, chunk_size);
    auto run_chunk = [&](uint64_t ci) {
        const uint64_t a = lo + ci * chunk_size;
        const uint64_t b = a + chunk_size - 1 < hi ? a + chunk_size - 1 : hi;
        fn(ChunkRange{ci, a, b});
    };

    if (workers <= 1 || chunks == 1) {
        for (uint64_t ci = 0; ci < chunks; ++ci) run_chunk(ci);
        return;
    }

    const unsigned nthreads = workers < chunks ? workers : static_cast<unsigned>(chunks);
    std::atomic<uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&] {
        for (;;) {
            const uint64_t ci = next.fetch_add(1);
            if (ci >= chunks || failed.load()) return;
            try {
                run_chunk(ci);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace erdoslab
