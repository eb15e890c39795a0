#include "erdoslab/valuations.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"
#include "erdoslab/util.hpp"

namespace erdoslab {

namespace detail {

uint64_t legendre_unchecked(uint64_t n, uint64_t p) {
    uint64_t total = 0;
    for (uint64_t m = n / p; m > 0; m /= p) total += m;
    return total;
}

uint64_t central_binom_unchecked(uint64_t n, uint64_t p) {
    const uint64_t two_n = 2 * n;
    uint64_t b = 0;
    for (uint64_t q = p; q <= two_n;) {
        const uint64_t digit = two_n / q - 2 * (n / q);
        assert(digit <= 1);  // each carry term is 0 or 1
        b += digit;
        if (q > two_n / p) break;  // next power would pass 2n; also stops overflow
        q *= p;
    }
    return b;
}

}  // namespace detail

namespace {

void require_prime(uint64_t p, const char* where) {
    if (!trial_is_prime(p))
        throw std::domain_error(std::string(where) + ": " + std::to_string(p) +
                                " is not prime");
}

}  // namespace

uint64_t legendre_valuation(uint64_t n, uint64_t p) {
    require_prime(p, "legendre_valuation");
    return detail::legendre_unchecked(n, p);
}

uint64_t central_binom_valuation(uint64_t n, uint64_t p) {
    if (n < 1)
        throw std::domain_error("central_binom_valuation: n must be >= 1");
    require_prime(p, "central_binom_valuation");
    return detail::central_binom_unchecked(n, p);
}

ValuationRecord valuation_record(uint64_t n, uint64_t p) {
    require_prime(p, "valuation_record");
    return {n, p, detail::legendre_unchecked(n, p), detail::central_binom_unchecked(n, p)};
}

int binomial_range_index(uint64_t n, uint64_t p) {
    const uint64_t two_n = 2 * n;
    if (p < 2 || p >= two_n)
        throw std::domain_error("binomial_range_index: need 2 <= p < 2n");
    if (p <= two_n / p) return 0;  // p*p <= 2n, overflow-safe form
    if (3 * p <= two_n) return 1;
    if (p <= n) return 2;
    return 3;
}

RangeDecomposition decompose(uint64_t n, const PrimeTable& table) {
    if (n < 5)
        throw std::domain_error("decompose: n must be >= 5, got " + std::to_string(n));
    if (table.limit() < 2 * n)
        throw coverage_error("decompose: table limit " + std::to_string(table.limit()) +
                             " below 2n = " + std::to_string(2 * n));
    RangeDecomposition d;
    d.n = n;
    for (uint64_t p : table.primes()) {
        if (p >= 2 * n) break;
        const uint64_t b = detail::central_binom_unchecked(n, p);
        if (b > 0)
            d.parts[static_cast<size_t>(binomial_range_index(n, p))].push(
                p, static_cast<uint32_t>(b));
    }
    return d;
}

}  // namespace erdoslab
