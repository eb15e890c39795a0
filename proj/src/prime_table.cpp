#include "erdoslab/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"
#include "erdoslab/util.hpp"

namespace erdoslab {

namespace {

// Odd primes up to `limit`, by a plain sieve. Only used for the base primes
// of the segmented pass, so limit here is at most sqrt of the real limit.
std::vector<uint64_t> odd_base_primes(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 3) return out;
    std::vector<char> composite(limit + 1, 0);
    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (composite[p]) continue;
        for (uint64_t m = p * p; m <= limit; m += 2 * p) composite[m] = 1;
    }
    for (uint64_t p = 3; p <= limit; p += 2)
        if (!composite[p]) out.push_back(p);
    return out;
}

}  // namespace

PrimeTable PrimeTable::build(uint64_t limit, uint64_t budget) {
    if (limit < 2)
        throw std::domain_error("PrimeTable::build: limit must be >= 2, got " +
                                std::to_string(limit));
    if (limit > budget)
        throw resource_error("PrimeTable::build: limit " + std::to_string(limit) +
                             " exceeds budget " + std::to_string(budget));

    PrimeTable t;
    t.limit_ = limit;

    const uint64_t odd_count = (limit + 1) / 2;  // indices 0..(limit-1)/2 for 1,3,5,...
    t.odd_bits_.assign((odd_count + 63) / 64, 0);

    // Reserve with the usual prime-count estimate to avoid regrowth.
    double est = static_cast<double>(limit) / std::log(static_cast<double>(limit) + 2.0);
    t.primes_.reserve(static_cast<size_t>(est * 1.15) + 16);
    t.primes_.push_back(2);

    const std::vector<uint64_t> base = odd_base_primes(isqrt(limit));
    std::vector<char> seg(kSegmentOdds);

    for (uint64_t seg_begin = 0; seg_begin < odd_count; seg_begin += kSegmentOdds) {
        const uint64_t seg_end = std::min(seg_begin + kSegmentOdds, odd_count);
        const uint64_t count = seg_end - seg_begin;
        const uint64_t v_lo = 2 * seg_begin + 1;        // first odd value in segment
        const uint64_t v_hi = 2 * (seg_end - 1) + 1;    // last odd value in segment
        std::fill(seg.begin(), seg.begin() + count, 1);

        for (uint64_t p : base) {
            uint64_t start = p * p;
            if (start > v_hi) break;
            if (start < v_lo) {
                uint64_t m = ceil_div(v_lo, p) * p;
                if (m % 2 == 0) m += p;
                start = m;
            }
            for (uint64_t m = start; m <= v_hi; m += 2 * p) seg[(m - v_lo) / 2] = 0;
        }
        if (seg_begin == 0) seg[0] = 0;  // 1 is not prime

        for (uint64_t i = 0; i < count; ++i) {
            if (!seg[i]) continue;
            const uint64_t v = v_lo + 2 * i;
            const uint64_t idx = seg_begin + i;
            t.odd_bits_[idx >> 6] |= uint64_t{1} << (idx & 63);
            t.primes_.push_back(v);
        }
    }
    return t;
}

bool PrimeTable::is_prime(uint64_t n) const {
    if (n > limit_)
        throw coverage_error("PrimeTable::is_prime: " + std::to_string(n) +
                             " exceeds table limit " + std::to_string(limit_));
    if (n == 2) return true;
    if (n < 2 || n % 2 == 0) return false;
    return odd_bit(n);
}

std::vector<uint64_t> PrimeTable::primes_in(uint64_t lo, uint64_t hi) const {
    if (hi > limit_ + 1)
        throw coverage_error("PrimeTable::primes_in: interval end " + std::to_string(hi) +
                             " exceeds table limit " + std::to_string(limit_));
    auto first = std::upper_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::lower_bound(first, primes_.end(), hi);
    return std::vector<uint64_t>(first, last);
}

uint64_t PrimeTable::count_primes_upto(uint64_t x) const {
    if (x > limit_)
        throw coverage_error("PrimeTable::count_primes_upto: " + std::to_string(x) +
                             " exceeds table limit " + std::to_string(limit_));
    auto last = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<uint64_t>(last - primes_.begin());
}

}  // namespace erdoslab
