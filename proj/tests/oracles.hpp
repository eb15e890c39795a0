#pragma once

// Independent reference implementations used only by the tests. Everything
// here recomputes results from first principles (trial division, divisor
// enumeration, library big-number routines, high-precision directed
// rounding) so that agreement with the main code is meaningful.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

bool is_prime(uint64_t n);

// Primes p with lo < p < hi, ascending.
std::vector<uint64_t> primes_between(uint64_t lo, uint64_t hi);

uint64_t count_primes_upto(uint64_t limit);

// Smallest prime > n, found by stepping forward with trial division.
uint64_t next_prime(uint64_t n);

// Factorization by dividing out 2, 3, 4, ... in order (composites never
// divide what remains, so no primality testing is involved).
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

// sigma(n) by enumerating all divisors in O(sqrt n).
uint64_t sigma_by_enumeration(uint64_t n);

uint64_t sopf(uint64_t n, bool with_multiplicity);

// sigma(1..limit) at once, by harmonic divisor sweeping; index 0 unused.
std::vector<uint64_t> sigma_sieve(uint64_t limit);

// --- GMP-backed exact values ---

std::string central_binomial_decimal(uint64_t n);   // binomial(2n, n)
uint64_t prime_exponent_in_central_binomial(uint64_t n, uint64_t p);
std::string power_decimal(uint64_t base, uint64_t exp);
std::string factorial_decimal(uint64_t n);
uint64_t prime_exponent_in_factorial(uint64_t n, uint64_t p);

// --- MPFR-backed high-precision directed rounding (340-bit) ---

// Evaluates 2^(2n - 2*ceil(2n/3)) >= (2n)^(ceil(sqrt(2n)) + 1) by comparing
// exponents with both rounding directions; aborts if the two directions
// ever disagree (they never do at this precision over the tested ranges).
bool final_inequality_pass_hp(uint64_t n);

// Smallest n0 <= sweep_hi such that the inequality above holds for every
// n in [n0, sweep_hi].
uint64_t final_inequality_crossover_hp(uint64_t sweep_hi);

// True iff sum of log2 over the given primes is at most 2n, decided with
// directed rounding in both directions (aborts on disagreement).
bool primorial_log_bound_pass_hp(uint64_t n, const std::vector<uint64_t>& primes_upto_n);

}  // namespace oracle
