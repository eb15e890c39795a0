#pragma once

#include <cstdint>
#include <vector>

namespace erdoslab {

// Primality data for [2, limit], built once by a segmented sieve and
// immutable afterwards. Membership is stored as a bitset over odd numbers
// (even numbers other than 2 are never prime), so the table costs one bit
// per two integers plus the packed list of primes in ascending order.
//
// All queries are const and safe to call concurrently. Queries beyond
// `limit` throw coverage_error rather than returning a truncated answer.
class PrimeTable {
public:
    // Default budget: table sizes above this throw resource_error before
    // any allocation happens.
    static constexpr uint64_t kDefaultBudget = 4'000'000'000ULL;

    // Number of odd values processed per sieve segment. The working set
    // during construction stays at this fixed size regardless of `limit`.
    static constexpr uint64_t kSegmentOdds = uint64_t{1} << 18;

    static PrimeTable build(uint64_t limit, uint64_t budget = kDefaultBudget);

    uint64_t limit() const { return limit_; }

    // True iff n is prime. Requires n <= limit.
    bool is_prime(uint64_t n) const;

    // Primes p with lo < p < hi, ascending. Requires hi <= limit + 1.
    std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) const;

    // Number of primes p <= x. Requires x <= limit.
    uint64_t count_primes_upto(uint64_t x) const;

    // All primes <= limit, ascending.
    const std::vector<uint64_t>& primes() const { return primes_; }

private:
    PrimeTable() = default;

    bool odd_bit(uint64_t n) const {
        uint64_t i = n >> 1;
        return (odd_bits_[i >> 6] >> (i & 63)) & 1;
    }

    uint64_t limit_ = 0;
    std::vector<uint64_t> odd_bits_;   // bit i <=> 2i+1 is prime
    std::vector<uint64_t> primes_;
};

}  // namespace erdoslab
