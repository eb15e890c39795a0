#include "erdoslab/extras.hpp"

#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"
#include "erdoslab/parallel.hpp"
#include "erdoslab/util.hpp"

namespace erdoslab {

namespace {

constexpr uint64_t kScanChunk = 1024;

void require_factorize_coverage(const PrimeTable& table, uint64_t top, const char* where) {
    if (table.limit() < top && table.limit() < ceil_sqrt(top))
        throw coverage_error(std::string(where) + ": table limit " +
                             std::to_string(table.limit()) +
                             " cannot factorize values up to " + std::to_string(top));
}

}  // namespace

std::vector<RuthAaronPair> ruth_aaron_pairs(uint64_t limit, SopfMode mode,
                                            const PrimeTable& table, unsigned workers) {
    if (limit < 2)
        throw std::domain_error("ruth_aaron_pairs: limit must be >= 2, got " +
                                std::to_string(limit));
    require_factorize_coverage(table, limit + 1, "ruth_aaron_pairs");

    std::vector<std::vector<RuthAaronPair>> slots(chunk_count(2, limit, kScanChunk));
    for_each_chunk(2, limit, kScanChunk, workers, [&](const ChunkRange& c) {
        auto& out = slots[c.index];
        uint64_t prev = sopf(c.lo, mode, table);
        for (uint64_t n = c.lo; n <= c.hi; ++n) {
            const uint64_t next = sopf(n + 1, mode, table);
            if (prev == next) out.push_back({n, prev, mode});
            prev = next;
        }
    });

    std::vector<RuthAaronPair> merged;
    for (auto& s : slots)
        for (auto& p : s) merged.push_back(p);
    return merged;
}

bool is_abundant(uint64_t n, const PrimeTable& table) {
    if (n < 1)
        throw std::domain_error("is_abundant: n must be >= 1");
    return static_cast<unsigned __int128>(sigma(n, table)) >
           static_cast<unsigned __int128>(2) * n;
}

DensityEstimate abundant_density(uint64_t limit, const PrimeTable& table, unsigned workers) {
    if (limit < 1)
        throw std::domain_error("abundant_density: limit must be >= 1, got " +
                                std::to_string(limit));
    require_factorize_coverage(table, limit, "abundant_density");

    std::vector<uint64_t> counts(chunk_count(1, limit, kScanChunk), 0);
    for_each_chunk(1, limit, kScanChunk, workers, [&](const ChunkRange& c) {
        uint64_t found = 0;
        for (uint64_t n = c.lo; n <= c.hi; ++n)
            if (is_abundant(n, table)) ++found;
        counts[c.index] = found;
    });

    DensityEstimate d;
    d.limit = limit;
    for (uint64_t c : counts) d.count += c;
    return d;
}

}  // namespace erdoslab
