#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "erdoslab/errors.hpp"
#include "erdoslab/extras.hpp"
#include "oracles.hpp"

using namespace erdoslab;

namespace {
const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(1000);
    return t;
}

std::vector<uint64_t> starts(const std::vector<RuthAaronPair>& pairs) {
    std::vector<uint64_t> out;
    for (const auto& p : pairs) out.push_back(p.n);
    return out;
}
}  // namespace

TEST_CASE("equal-sum consecutive pairs up to 1000, with multiplicity") {
    const auto pairs = ruth_aaron_pairs(1000, SopfMode::with_multiplicity, table());
    CHECK(starts(pairs) == std::vector<uint64_t>{5, 8, 15, 77, 125, 714, 948});
    for (const auto& p : pairs) {
        CHECK(p.sum == oracle::sopf(p.n, true));
        CHECK(p.sum == oracle::sopf(p.n + 1, true));
    }
    // The famous pair and its shared sum.
    const auto famous = std::find_if(pairs.begin(), pairs.end(),
                                     [](const RuthAaronPair& p) { return p.n == 714; });
    REQUIRE(famous != pairs.end());
    CHECK(famous->sum == 29);
}

TEST_CASE("equal-sum consecutive pairs up to 1000, distinct primes") {
    const auto pairs = ruth_aaron_pairs(1000, SopfMode::distinct, table());
    CHECK(starts(pairs) == std::vector<uint64_t>{5, 24, 49, 77, 104, 153, 369, 492, 714});
    for (const auto& p : pairs) {
        CHECK(p.sum == oracle::sopf(p.n, false));
        CHECK(p.sum == oracle::sopf(p.n + 1, false));
    }
}

TEST_CASE("the two modes first diverge at (8, 9)") {
    const auto mult = ruth_aaron_pairs(20, SopfMode::with_multiplicity, table());
    const auto dist = ruth_aaron_pairs(20, SopfMode::distinct, table());
    CHECK(starts(mult) == std::vector<uint64_t>{5, 8, 15});
    CHECK(starts(dist) == std::vector<uint64_t>{5});
    // 8 = 2^3 and 9 = 3^2: multiplicities give 6 = 6, distinct gives 2 != 3.
    CHECK(oracle::sopf(8, true) == oracle::sopf(9, true));
    CHECK(oracle::sopf(8, false) != oracle::sopf(9, false));
}

TEST_CASE("pair scan agrees with the oracle up to 20000") {
    for (const SopfMode mode : {SopfMode::with_multiplicity, SopfMode::distinct}) {
        std::vector<uint64_t> expected;
        for (uint64_t n = 2; n <= 20000; ++n)
            if (oracle::sopf(n, mode == SopfMode::with_multiplicity) ==
                oracle::sopf(n + 1, mode == SopfMode::with_multiplicity))
                expected.push_back(n);
        CHECK(starts(ruth_aaron_pairs(20000, mode, table())) == expected);
    }
}

TEST_CASE("pair scan is worker-count independent") {
    const auto one = ruth_aaron_pairs(50000, SopfMode::with_multiplicity, table(), 1);
    for (unsigned workers : {3u, 8u})
        CHECK(ruth_aaron_pairs(50000, SopfMode::with_multiplicity, table(), workers) == one);
}

TEST_CASE("squarefree neighbours pair up in both modes or neither") {
    const auto is_squarefree = [](uint64_t n) {
        for (const auto& [p, e] : oracle::factorize(n))
            if (e > 1) return false;
        return true;
    };
    const auto mult = ruth_aaron_pairs(5000, SopfMode::with_multiplicity, table());
    const auto dist = ruth_aaron_pairs(5000, SopfMode::distinct, table());
    for (const auto& p : mult)
        if (is_squarefree(p.n) && is_squarefree(p.n + 1)) {
            const auto hit = std::find_if(dist.begin(), dist.end(),
                                          [&](const RuthAaronPair& q) { return q.n == p.n; });
            CHECK(hit != dist.end());
        }
}

TEST_CASE("abundance is strict") {
    CHECK(is_abundant(12, table()));
    CHECK(is_abundant(18, table()));
    CHECK(is_abundant(20, table()));
    CHECK(is_abundant(945, table()));  // first odd abundant
    CHECK(!is_abundant(6, table()));   // perfect, not abundant
    CHECK(!is_abundant(28, table()));  // perfect, not abundant
    CHECK(!is_abundant(1, table()));
    CHECK(!is_abundant(7, table()));
    CHECK(!is_abundant(944, table()));
}

TEST_CASE("abundant counts stay exact integer pairs") {
    const auto d20 = abundant_density(20, table());
    CHECK(d20.limit == 20);
    CHECK(d20.count == 3);  // 12, 18, 20 -- nothing else that early

    const auto d1 = abundant_density(1, table());
    CHECK(d1.count == 0);
    CHECK(d1.limit == 1);

    // Monotone in the limit, and exactly right against the divisor sweep.
    const auto sums = oracle::sigma_sieve(10000);
    uint64_t expected = 0, prev = 0;
    for (uint64_t limit : {10ull, 100ull, 1000ull, 10000ull}) {
        expected = 0;
        for (uint64_t n = 1; n <= limit; ++n)
            if (sums[n] > 2 * n) ++expected;
        const auto d = abundant_density(limit, table());
        CHECK(d.count == expected);
        CHECK(d.count >= prev);
        prev = d.count;
    }
    CHECK(abundant_density(100000, table()).count == 24795);
}

TEST_CASE("density scan is worker-count independent") {
    const auto one = abundant_density(30000, table(), 1);
    for (unsigned workers : {2u, 8u})
        CHECK(abundant_density(30000, table(), workers) == one);
}

TEST_CASE("extras preconditions") {
    CHECK_THROWS_AS(ruth_aaron_pairs(1, SopfMode::distinct, table()), std::domain_error);
    CHECK_THROWS_AS(abundant_density(0, table()), std::domain_error);
    const auto tiny = PrimeTable::build(5);
    CHECK_THROWS_AS(ruth_aaron_pairs(1000, SopfMode::distinct, tiny), coverage_error);
    CHECK_THROWS_AS(abundant_density(1000, tiny), coverage_error);
}
