#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "erdoslab/errors.hpp"
#include "erdoslab/exact.hpp"
#include "erdoslab/valuations.hpp"
#include "oracles.hpp"

using namespace erdoslab;

TEST_CASE("decimal round trip") {
    CHECK(BigNat{0}.to_decimal() == "0");
    CHECK(BigNat{1}.to_decimal() == "1");
    CHECK(BigNat::from_decimal("184756").to_decimal() == "184756");
    const std::string big =
        "123456789012345678901234567890123456789012345678901234567890"
        "987654321098765432109876543210987654321098765432109876543210";
    CHECK(BigNat::from_decimal(big).to_decimal() == big);
    CHECK_THROWS_AS(BigNat::from_decimal(""), std::domain_error);
    CHECK_THROWS_AS(BigNat::from_decimal("12a3"), std::domain_error);
    CHECK_THROWS_AS(BigNat::from_decimal("-5"), std::domain_error);
    CHECK_THROWS_AS(BigNat::from_decimal(" 5"), std::domain_error);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const uint64_t v = rng();
        CHECK(BigNat{v}.to_decimal() == std::to_string(v));
        CHECK(BigNat::from_decimal(std::to_string(v)).to_u64() == v);
    }
}

TEST_CASE("ordering matches native integers") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const uint64_t a = rng() % 1000000, b = rng() % 1000000;
        CHECK((BigNat{a} < BigNat{b}) == (a < b));
        CHECK((BigNat{a} == BigNat{b}) == (a == b));
        CHECK(BigNat{a}.cmp_u64(b) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("powers") {
    CHECK(BigNat::pow(BigNat{4}, 10).to_decimal() == "1048576");
    CHECK(BigNat::pow(BigNat{2}, 4).to_decimal() == "16");
    CHECK(BigNat::pow(BigNat{7}, 0).to_decimal() == "1");
    CHECK(BigNat::pow(BigNat{0}, 5).to_decimal() == "0");
    CHECK(BigNat::two_pow(200).to_decimal() == oracle::power_decimal(2, 200));
    CHECK(BigNat::two_pow(0).to_decimal() == "1");

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const uint64_t base = 2 + rng() % 50;
        const uint64_t a = rng() % 8, b = rng() % 8;
        CHECK(BigNat::pow(BigNat::pow(BigNat{base}, a), b) == BigNat::pow(BigNat{base}, a * b));
        CHECK(BigNat::pow(BigNat{base}, a).to_decimal() == oracle::power_decimal(base, a));
    }
}

TEST_CASE("in-place arithmetic") {
    BigNat x{12};
    x.mul_u64(1000000007ull);
    CHECK(x.to_decimal() == "12000000084");
    x.divexact_u64(12);
    CHECK(x.to_decimal() == "1000000007");
    x.shl(3);
    CHECK(x.to_decimal() == "8000000056");
    CHECK(BigNat{5}.bit_count() == 3);
    CHECK(BigNat::two_pow(64).fits_u64() == false);
    CHECK_THROWS_AS((void)BigNat::two_pow(64).to_u64(), std::overflow_error);
    CHECK(BigNat::two_pow(63).fits_u64());
}

TEST_CASE("primorial values and properties") {
    const auto t = PrimeTable::build(1000);
    CHECK(primorial(2, t).to_decimal() == "2");
    CHECK(primorial(10, t).to_decimal() == "210");
    CHECK(primorial(11, t).to_decimal() == "2310");
    CHECK(primorial(100, t).to_decimal() ==
          "2305567963945518424753102147331756070");  // product of the 25 primes to 97

    // Multiplying primes by hand must give the same number, and stripping
    // each prime out exactly once must leave 1 (i.e. the value is squarefree
    // with every prime up to n present).
    for (uint64_t n : {2ull, 3ull, 30ull, 52ull}) {
        BigNat manual{1};
        for (uint64_t p = 2; p <= n; ++p)
            if (oracle::is_prime(p)) manual.mul_u64(p);
        CHECK(primorial(n, t) == manual);

        uint64_t m = primorial(n, t).to_u64();
        for (uint64_t p = 2; p <= n; ++p) {
            if (!oracle::is_prime(p)) continue;
            CHECK(m % p == 0);
            m /= p;
            CHECK(m % p != 0);
        }
        CHECK(m == 1);
    }

    CHECK_THROWS_AS(primorial(1, t), std::domain_error);
    CHECK_THROWS_AS(primorial(2000, t), coverage_error);
}

TEST_CASE("central binomial coefficients") {
    CHECK(central_binomial(1).to_decimal() == "2");
    CHECK(central_binomial(2).to_decimal() == "6");
    CHECK(central_binomial(5).to_decimal() == "252");
    CHECK(central_binomial(10).to_decimal() == "184756");

    for (uint64_t n = 1; n <= 300; ++n)
        CHECK(central_binomial(n).to_decimal() == oracle::central_binomial_decimal(n));

    CHECK_THROWS_AS(central_binomial(0), std::domain_error);
    CHECK_THROWS_AS(central_binomial(10001), resource_error);
    CHECK_NOTHROW(central_binomial(12000, 20000));
}

TEST_CASE("central binomial equals the product of its prime powers") {
    const auto t = PrimeTable::build(600);
    for (uint64_t n = 1; n <= 120; ++n) {
        BigNat product{1};
        for (uint64_t p : t.primes()) {
            if (p > 2 * n) break;
            const uint64_t b = central_binom_valuation(n, p);
            if (b > 0) product *= BigNat::pow(BigNat{p}, b);
        }
        CHECK(product == central_binomial(n));
    }
}

TEST_CASE("factor products") {
    const auto t = PrimeTable::build(1000);
    CHECK(factor_product(factorize(1, t)).to_decimal() == "1");
    CHECK(factor_product(factorize(252, t)).to_decimal() == "252");
    for (uint64_t n = 1; n <= 2000; ++n)
        CHECK(factor_product(factorize(n, t)).to_u64() == n);
}
