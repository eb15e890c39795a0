#pragma once

#include <array>
#include <cstdint>

#include "erdoslab/factorization.hpp"
#include "erdoslab/prime_table.hpp"

namespace erdoslab {

// Exponent of prime p in n!, by the floor-sum formula. Requires p prime.
uint64_t legendre_valuation(uint64_t n, uint64_t p);

// Exponent b(n,p) of prime p in binomial(2n,n), as the truncated sum of
// per-digit terms floor(2n/p^i) - 2*floor(n/p^i), each 0 or 1. Requires
// p prime and n >= 1.
uint64_t central_binom_valuation(uint64_t n, uint64_t p);

struct ValuationRecord {
    uint64_t n;
    uint64_t p;
    uint64_t factorial_exponent;  // exponent of p in n!
    uint64_t binomial_exponent;   // exponent of p in binomial(2n,n)
};

ValuationRecord valuation_record(uint64_t n, uint64_t p);

// Which of the four disjoint prime ranges p falls into for parameter n:
//   0: p*p <= 2n            (small primes; exponent can exceed 1)
//   1: p*p > 2n and 3p <= 2n (exponent at most 1)
//   2: 2n < 3p and p <= n    (exponent 0)
//   3: n < p < 2n            (exponent exactly 1)
// Requires 2 <= p < 2n. Boundaries use exact integer comparisons.
int binomial_range_index(uint64_t n, uint64_t p);

// binomial(2n,n) split as the product of its prime powers grouped by range;
// multiplying all four parts back together reconstructs the binomial
// exactly. Requires n >= 5 (below that some ranges degenerate) and a table
// covering 2n.
struct RangeDecomposition {
    uint64_t n;
    std::array<Factorization, 4> parts;
};

RangeDecomposition decompose(uint64_t n, const PrimeTable& table);

namespace detail {
// Unchecked cores, for hot loops that already know p is prime.
uint64_t legendre_unchecked(uint64_t n, uint64_t p);
uint64_t central_binom_unchecked(uint64_t n, uint64_t p);
}  // namespace detail

}  // namespace erdoslab
