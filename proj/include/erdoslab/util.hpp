#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace erdoslab {

// Floor of sqrt(n), exact for all uint64 inputs.
inline uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    // Start from the double approximation, then correct. The correction
    // loop moves at most a couple of steps.
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Smallest s with s*s >= n.
inline uint64_t ceil_sqrt(uint64_t n) {
    uint64_t s = isqrt(n);
    return s * s == n ? s : s + 1;
}

inline uint64_t ceil_div(uint64_t a, uint64_t b) {
    return a / b + (a % b != 0);
}

// Largest k with 2^k <= x. Requires x >= 1.
inline unsigned floor_log2(uint64_t x) {
    return static_cast<unsigned>(std::bit_width(x)) - 1;
}

// Smallest k with 2^k >= x. ceil_log2(0) and ceil_log2(1) are 0.
inline unsigned ceil_log2(uint64_t x) {
    return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1));
}

// Deterministic primality by trial division; independent of any PrimeTable.
// Used for validating small inputs and ladder elements.
inline bool trial_is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace erdoslab
