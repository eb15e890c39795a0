#pragma once

#include <cstdint>

#include "erdoslab/bignat.hpp"
#include "erdoslab/factorization.hpp"
#include "erdoslab/prime_table.hpp"

namespace erdoslab {

// Largest n for which fully materialized products are built by default.
// Above these, callers are expected to use the certified-rounding paths.
inline constexpr uint64_t kDefaultExactPrimorialLimit = 10'000;
inline constexpr uint64_t kDefaultExactBinomialLimit = 10'000;

// Product of all primes <= n, exactly. Requires n >= 2 and a table
// covering n.
BigNat primorial(uint64_t n, const PrimeTable& table);

// binomial(2n, n), exactly, via the cancellation-free recurrence
// C(2k,k) = C(2k-2,k-1) * 2(2k-1) / k. Requires n >= 1; n above `budget`
// throws resource_error.
BigNat central_binomial(uint64_t n, uint64_t budget = kDefaultExactBinomialLimit);

// The integer a Factorization stands for, as a BigNat (no overflow concerns).
BigNat factor_product(const Factorization& f);

inline BigNat pow(const BigNat& base, uint64_t exp) { return BigNat::pow(base, exp); }

}  // namespace erdoslab
