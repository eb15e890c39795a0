#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erdoslab/prime_table.hpp"
#include "erdoslab/report.hpp"

namespace erdoslab {

// Smallest prime p with n < p < 2n. Requires n >= 2 and a table covering
// 2n - 1. Coming up empty throws postulate_violation (a logic error: it
// would mean the table is broken, or a theorem is not).
uint64_t bertrand_prime(uint64_t n, const PrimeTable& table);

// Checks that (n, 2n) contains a prime for every n in [n_lo, n_hi], via a
// single pass over prime gaps rather than a per-n search. classic_form
// instead checks the open interval (n, 2n - 2), which requires n_lo > 3.
RangeCertificate verify_bertrand_range(uint64_t n_lo, uint64_t n_hi, const PrimeTable& table,
                                       unsigned workers = 1, bool classic_form = false);

// Largest n for which (n, 2n) may lack a prime in each odd residue class
// mod 4; misses at or below this are reported as anomalies, above as fails.
inline constexpr uint64_t kTwoPrimesMod4Threshold = 7;

struct TwoPrimesMod4 {
    uint64_t n = 0;
    std::optional<uint64_t> prime_3_mod_4;  // smallest such prime in (n, 2n)
    std::optional<uint64_t> prime_1_mod_4;
    bool found() const { return prime_3_mod_4 && prime_1_mod_4; }
};

// Searches (n, 2n) for one prime in each odd residue class mod 4.
// Requires n >= 2 and a table covering 2n - 1.
TwoPrimesMod4 two_primes_mod4(uint64_t n, const PrimeTable& table);

// Range check of the two-residue refinement for n in [n_lo, n_hi].
RangeCertificate verify_two_primes_range(uint64_t n_lo, uint64_t n_hi,
                                         const PrimeTable& table, unsigned workers = 1);

// A chain of primes each less than double its predecessor, meant to cover
// every n in [2, coverage_target]: some chain prime lands in (n, 2n).
struct LadderChain {
    std::vector<uint64_t> primes;
    uint64_t coverage_target = 0;
    bool operator==(const LadderChain&) const = default;
};

// Builds a chain greedily from 2, always jumping to the largest prime
// below double the current one, until the target is passed. Requires
// target >= 2 and a table covering 2 * target.
LadderChain greedy_ladder(uint64_t target, const PrimeTable& table);

struct LadderCheck {
    bool valid = false;
    // Index into the chain of the first offending element, when one exists.
    std::optional<size_t> violation_index;
    std::string reason;  // empty when valid
};

// Validates a chain: starts at 2, strictly increasing, every element prime
// (by trial division, independent of any table), each under double its
// predecessor, last element past the target. Chains with targets at most
// empirical_limit additionally get an exhaustive coverage scan.
LadderCheck verify_ladder(const LadderChain& chain, uint64_t empirical_limit = 1'000'000);

// The 14-step reference chain covering [2, 4000].
const LadderChain& reference_ladder();

}  // namespace erdoslab
