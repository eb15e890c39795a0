#pragma once

#include <cstdint>

#include "erdoslab/exact.hpp"
#include "erdoslab/log2_bounds.hpp"
#include "erdoslab/prime_table.hpp"
#include "erdoslab/report.hpp"

namespace erdoslab {

struct VerifyConfig {
    // Above these n, chebyshev_bound / lower_bound switch from materialized
    // integers to certified rounding.
    uint64_t exact_primorial_limit = kDefaultExactPrimorialLimit;
    uint64_t exact_binomial_limit = kDefaultExactBinomialLimit;
    // Relative slack assumed on double log2 values (see log2_bounds.hpp).
    double log_slack_rel = kDefaultLogSlackRel;
    // Fixed chunk width for range verification; independent of worker
    // count so range output is deterministic.
    uint64_t chunk_size = 1024;
};

// Single-n checkers. Preconditions are validated and throw std::domain_error;
// insufficient table coverage throws coverage_error.

// Product of primes <= n is at most 4^n. n >= 2; table covers n.
LemmaReport check_chebyshev(uint64_t n, const PrimeTable& table,
                            const VerifyConfig& cfg = {});

// p^b(n,p) <= 2n for every prime p <= 2n (larger primes have b = 0).
// n >= 1; table covers 2n.
LemmaReport check_pb_le_2n(uint64_t n, const PrimeTable& table);

// b(n,p) <= 1 for every prime p < 2n with p*p > 2n. n >= 1; table covers 2n.
LemmaReport check_b_le_1(uint64_t n, const PrimeTable& table);

// b(n,p) == 0 for every prime p with 2n < 3p and p <= n. n >= 1; table
// covers n. The lone exception n = 2 (p = 2 carries exponent 1 into
// binomial(4,2) = 6) is reported as an anomaly with its witness.
LemmaReport check_b_eq_0(uint64_t n, const PrimeTable& table);

// 2n * binomial(2n,n) > 4^n. n >= 1 (n = 1 genuinely fails: 4 = 4, reported
// with witness); table covers 2n when the certified path is used.
LemmaReport check_lower_bound(uint64_t n, const PrimeTable& table,
                              const VerifyConfig& cfg = {});

// 4^n >= 2n * (2n)^sqrt(2n) * 4^(2n/3), checked in the sound integer
// over-approximation 2^(2n - 2*ceil(2n/3)) >= (2n)^(ceil(sqrt(2n)) + 1).
// A pass certifies the real-exponent inequality; a fail only means this
// rounding could not certify it. n >= 2. Method is always
// certified_rounding.
LemmaReport check_final_inequality(uint64_t n);

// Smallest table limit check_range needs for the given statement and upper
// endpoint (depends on cfg for the statements with an exact/certified split).
uint64_t required_table_limit(Statement lemma, uint64_t n_hi, const VerifyConfig& cfg = {});

// Smallest n the statement's checker accepts.
uint64_t min_supported_n(Statement lemma);

// Checks one statement for every n in [n_lo, n_hi], in fixed chunks that
// `workers` threads process independently; results are merged in chunk
// order, so the certificate is identical for any worker count. Accepts the
// five lemma statements plus final_inequality.
RangeCertificate check_range(Statement lemma, uint64_t n_lo, uint64_t n_hi,
                             const PrimeTable& table, unsigned workers = 1,
                             const VerifyConfig& cfg = {});

// Smallest n0 <= sweep_hi such that final_inequality passes for every
// n in [n0, sweep_hi], found by a certified sweep from 2.
uint64_t certified_crossover(uint64_t sweep_hi, unsigned workers = 1,
                             const VerifyConfig& cfg = {});

}  // namespace erdoslab
