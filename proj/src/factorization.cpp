#include "erdoslab/factorization.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"
#include "erdoslab/util.hpp"

namespace erdoslab {

void Factorization::push(uint64_t prime, uint32_t exponent) {
    assert(exponent > 0);
    assert(factors_.empty() || factors_.back().prime < prime);
    factors_.push_back({prime, exponent});
}

uint64_t Factorization::value() const {
    uint64_t v = 1;
    for (const auto& [p, e] : factors_)
        for (uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(uint64_t n, const PrimeTable& table) {
    if (n < 1)
        throw std::domain_error("factorize: n must be >= 1");
    if (table.limit() < n && table.limit() < ceil_sqrt(n))
        throw coverage_error("factorize: table limit " + std::to_string(table.limit()) +
                             " covers neither " + std::to_string(n) + " nor its square root");

    Factorization f;
    uint64_t m = n;
    for (uint64_t p : table.primes()) {
        if (p > m / p) break;
        if (m % p != 0) continue;
        uint32_t e = 0;
        do {
            m /= p;
            ++e;
        } while (m % p == 0);
        f.push(p, e);
    }
    // Whatever remains has no prime factor <= sqrt(original n), hence is prime.
    if (m > 1) f.push(m, 1);
    return f;
}

uint64_t sopf(uint64_t n, SopfMode mode, const PrimeTable& table) {
    if (n < 2)
        throw std::domain_error("sopf: n must be >= 2, got " + std::to_string(n));
    uint64_t total = 0;
    const Factorization f = factorize(n, table);  // keep alive across the loop
    for (const auto& [p, e] : f.factors())
        total += mode == SopfMode::with_multiplicity ? p * e : p;
    return total;
}

uint64_t sigma(uint64_t n, const PrimeTable& table) {
    if (n < 1)
        throw std::domain_error("sigma: n must be >= 1");
    unsigned __int128 total = 1;
    const Factorization f = factorize(n, table);  // keep alive across the loop
    for (const auto& [p, e] : f.factors()) {
        // (p^(e+1) - 1) / (p - 1), computed in 128-bit to dodge overflow.
        unsigned __int128 pe = 1;
        for (uint32_t i = 0; i <= e; ++i) pe *= p;
        total *= (pe - 1) / (p - 1);
    }
    assert(total <= ~uint64_t{0});
    return static_cast<uint64_t>(total);
}

}  // namespace erdoslab
