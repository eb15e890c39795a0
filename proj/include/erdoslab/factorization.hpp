#pragma once

#include <cstdint>
#include <vector>

#include "erdoslab/prime_table.hpp"

namespace erdoslab {

struct PrimePower {
    uint64_t prime;
    uint32_t exponent;
    bool operator==(const PrimePower&) const = default;
};

// A positive integer represented exactly as its sorted prime-power list.
// The empty list represents 1.
class Factorization {
public:
    Factorization() = default;

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    // Append a factor; primes must arrive in strictly ascending order.
    void push(uint64_t prime, uint32_t exponent);

    // The represented integer. Only valid when the product fits in uint64
    // (always true for values produced by factorize()).
    uint64_t value() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<PrimePower> factors_;
};

// Exact factorization of n >= 1 by trial division against the table's
// primes. Requires the table to cover n or at least ceil(sqrt(n));
// otherwise coverage_error (results are never silently partial).
Factorization factorize(uint64_t n, const PrimeTable& table);

enum class SopfMode { with_multiplicity, distinct };

// Sum of prime factors of n >= 2: with multiplicity sums p*e over the
// factorization, distinct sums each prime once.
uint64_t sopf(uint64_t n, SopfMode mode, const PrimeTable& table);

// Sum of all divisors of n >= 1 (sigma function), computed from the
// factorization via the multiplicative formula.
uint64_t sigma(uint64_t n, const PrimeTable& table);

}  // namespace erdoslab
