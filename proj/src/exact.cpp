#include "erdoslab/exact.hpp"

#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"

namespace erdoslab {

BigNat primorial(uint64_t n, const PrimeTable& table) {
    if (n < 2)
        throw std::domain_error("primorial: n must be >= 2, got " + std::to_string(n));
    if (table.limit() < n)
        throw coverage_error("primorial: table limit " + std::to_string(table.limit()) +
                             " below " + std::to_string(n));
    BigNat r{1};
    for (uint64_t p : table.primes()) {
        if (p > n) break;
        r.mul_u64(p);
    }
    return r;
}

BigNat central_binomial(uint64_t n, uint64_t budget) {
    if (n < 1)
        throw std::domain_error("central_binomial: n must be >= 1");
    if (n > budget)
        throw resource_error("central_binomial: n " + std::to_string(n) +
                             " exceeds exact-materialization budget " + std::to_string(budget));
    BigNat c{2};  // C(2,1)
    for (uint64_t k = 2; k <= n; ++k) {
        c.mul_u64(2 * (2 * k - 1));
        c.divexact_u64(k);
    }
    return c;
}

BigNat factor_product(const Factorization& f) {
    BigNat r{1};
    for (const auto& [p, e] : f.factors())
        r *= BigNat::pow(BigNat{p}, e);
    return r;
}

}  // namespace erdoslab
