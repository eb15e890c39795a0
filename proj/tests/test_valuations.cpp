#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "erdoslab/errors.hpp"
#include "erdoslab/exact.hpp"
#include "erdoslab/valuations.hpp"
#include "oracles.hpp"

using namespace erdoslab;

TEST_CASE("factorial exponents by the floor-sum formula") {
    CHECK(legendre_valuation(10, 2) == 8);
    CHECK(legendre_valuation(10, 3) == 4);
    CHECK(legendre_valuation(10, 7) == 1);
    CHECK(legendre_valuation(10, 11) == 0);
    CHECK(legendre_valuation(1, 2) == 0);
    CHECK(legendre_valuation(0, 5) == 0);
    CHECK_THROWS_AS(legendre_valuation(10, 4), std::domain_error);
    CHECK_THROWS_AS(legendre_valuation(10, 1), std::domain_error);

    // Independent route: materialize n! and strip the prime out.
    for (uint64_t n : {5ull, 30ull, 100ull, 200ull})
        for (uint64_t p : {2ull, 3ull, 5ull, 13ull, 97ull, 199ull})
            CHECK(legendre_valuation(n, p) == oracle::prime_exponent_in_factorial(n, p));
}

TEST_CASE("central binomial exponents") {
    CHECK(central_binom_valuation(5, 2) == 2);   // 252 = 2^2 * 63
    CHECK(central_binom_valuation(5, 3) == 2);
    CHECK(central_binom_valuation(5, 7) == 1);
    CHECK(central_binom_valuation(5, 11) == 0);
    CHECK(central_binom_valuation(10, 7) == 0);
    CHECK(central_binom_valuation(10, 2) == 2);
    CHECK(central_binom_valuation(2, 2) == 1);   // binomial(4,2) = 6
    CHECK_THROWS_AS(central_binom_valuation(5, 6), std::domain_error);
    CHECK_THROWS_AS(central_binom_valuation(0, 2), std::domain_error);

    // Against the materialized coefficient, exhaustively for small n.
    for (uint64_t n = 1; n <= 80; ++n)
        for (uint64_t p = 2; p < 2 * n; ++p) {
            if (!oracle::is_prime(p)) continue;
            CHECK(central_binom_valuation(n, p) ==
                  oracle::prime_exponent_in_central_binomial(n, p));
        }
}

TEST_CASE("per-digit terms are always 0 or 1") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20000; ++trial) {
        const uint64_t n = 1 + rng() % 1000000;
        const uint64_t p = oracle::next_prime(rng() % 1000);
        uint64_t q = p;
        while (q <= 2 * n) {
            const uint64_t digit = (2 * n) / q - 2 * (n / q);
            CHECK(digit <= 1);
            if (q > (2 * n) / p) break;
            q *= p;
        }
    }
}

TEST_CASE("valuation records tie the two formulas together") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 2000; ++trial) {
        const uint64_t n = 1 + rng() % 100000;
        const uint64_t p = oracle::next_prime(1 + rng() % 300);
        const auto rec = valuation_record(n, p);
        CHECK(rec.n == n);
        CHECK(rec.p == p);
        // Exponent in binomial(2n,n) is exponent in (2n)! minus twice the
        // exponent in n!.
        CHECK(rec.binomial_exponent ==
              legendre_valuation(2 * n, p) - 2 * rec.factorial_exponent);
        // And the power never passes 2n.
        uint64_t pb = 1;
        bool exceeded = false;
        for (uint64_t i = 0; i < rec.binomial_exponent; ++i) {
            pb *= p;
            if (pb > 2 * n) exceeded = true;
        }
        CHECK(!exceeded);
    }
}

TEST_CASE("range classification boundaries are exact") {
    // n = 50: 2n = 100. sqrt boundary at 10, third boundary at 33.33, n at 50.
    CHECK(binomial_range_index(50, 2) == 0);
    CHECK(binomial_range_index(50, 7) == 0);    // 49 <= 100
    CHECK(binomial_range_index(50, 11) == 1);   // 121 > 100, 33 <= 100
    CHECK(binomial_range_index(50, 31) == 1);   // 93 <= 100
    CHECK(binomial_range_index(50, 37) == 2);   // 111 > 100, 37 <= 50
    CHECK(binomial_range_index(50, 47) == 2);
    CHECK(binomial_range_index(50, 53) == 3);
    CHECK(binomial_range_index(50, 97) == 3);
    CHECK_THROWS_AS(binomial_range_index(50, 1), std::domain_error);
    CHECK_THROWS_AS(binomial_range_index(50, 100), std::domain_error);
    CHECK_THROWS_AS(binomial_range_index(50, 101), std::domain_error);

    // Boundary pairs, one on each side of every comparison.
    CHECK(binomial_range_index(25, 7) == 0);   // 49 <= 50: equality stays small
    CHECK(binomial_range_index(24, 7) == 1);   // 49 > 48
    CHECK(binomial_range_index(17, 11) == 1);  // 33 <= 34: equality stays middle
    CHECK(binomial_range_index(16, 11) == 2);  // 33 > 32
    CHECK(binomial_range_index(13, 13) == 2);  // p == n belongs to the third range
    CHECK(binomial_range_index(12, 13) == 3);  // p == n + 1

    // Every prime below 2n lands in exactly one range, and the predicates
    // agree with the index.
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const uint64_t n = 5 + rng() % 5000;
        for (uint64_t p : oracle::primes_between(1, 2 * n)) {
            const int idx = binomial_range_index(n, p);
            const bool in0 = p * p <= 2 * n;
            const bool in1 = p * p > 2 * n && 3 * p <= 2 * n;
            const bool in2 = 3 * p > 2 * n && p <= n;
            const bool in3 = n < p && p < 2 * n;
            CHECK(static_cast<int>(in0) + in1 + in2 + in3 == 1);
            CHECK(idx == (in0 ? 0 : in1 ? 1 : in2 ? 2 : 3));
        }
    }
}

TEST_CASE("decomposition of binomial(20,10)") {
    const auto t = PrimeTable::build(64);
    const auto d = decompose(10, t);
    CHECK(d.n == 10);
    CHECK(d.parts[0].factors() == std::vector<PrimePower>{{2, 2}});
    CHECK(d.parts[1].factors().empty());
    CHECK(d.parts[2].factors().empty());
    CHECK(d.parts[3].factors() ==
          std::vector<PrimePower>{{11, 1}, {13, 1}, {17, 1}, {19, 1}});
    CHECK(factor_product(d.parts[0]).to_u64() * factor_product(d.parts[3]).to_u64() == 184756);
}

TEST_CASE("decomposition reconstructs the binomial exactly") {
    const auto t = PrimeTable::build(4100);
    for (uint64_t n = 5; n <= 2000; ++n) {
        const auto d = decompose(n, t);
        BigNat product{1};
        for (const auto& part : d.parts) product *= factor_product(part);
        CHECK(product == central_binomial(n));
        // Parts hold disjoint, ascending prime sets.
        uint64_t prev = 0;
        for (const auto& part : d.parts)
            for (const auto& [p, e] : part.factors()) {
                CHECK(p > prev);
                CHECK(e > 0);
                prev = p;
            }
    }
}

TEST_CASE("the third range is empty up to 2000") {
    const auto t = PrimeTable::build(4100);
    for (uint64_t n = 5; n <= 2000; ++n)
        CHECK(decompose(n, t).parts[2].factors().empty());
}

TEST_CASE("decomposition preconditions") {
    const auto t = PrimeTable::build(100);
    CHECK_THROWS_AS(decompose(4, t), std::domain_error);
    CHECK_THROWS_AS(decompose(51, t), coverage_error);
    CHECK_NOTHROW(decompose(50, t));
}
