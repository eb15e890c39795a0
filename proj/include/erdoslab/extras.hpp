#pragma once

#include <cstdint>
#include <vector>

#include "erdoslab/factorization.hpp"
#include "erdoslab/prime_table.hpp"

namespace erdoslab {

struct RuthAaronPair {
    uint64_t n;       // the pair is (n, n+1)
    uint64_t sum;     // shared sum of prime factors
    SopfMode mode;
    bool operator==(const RuthAaronPair&) const = default;
};

// All n <= limit where n and n+1 have equal sums of prime factors under the
// given mode, ascending. Requires limit >= 2 and a table able to factorize
// limit + 1.
std::vector<RuthAaronPair> ruth_aaron_pairs(uint64_t limit, SopfMode mode,
                                            const PrimeTable& table, unsigned workers = 1);

// sigma(n) > 2n, strictly. Perfect numbers are not abundant.
bool is_abundant(uint64_t n, const PrimeTable& table);

// Exact density of abundant numbers up to a limit, kept as the integer
// pair (count, limit) -- never a rounded ratio.
struct DensityEstimate {
    uint64_t limit = 0;
    uint64_t count = 0;
    bool operator==(const DensityEstimate&) const = default;
};

// Requires limit >= 1 and a table able to factorize limit.
DensityEstimate abundant_density(uint64_t limit, const PrimeTable& table,
                                 unsigned workers = 1);

}  // namespace erdoslab
