#include "erdoslab/bertrand.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <string>

#include "erdoslab/errors.hpp"
#include "erdoslab/parallel.hpp"
#include "erdoslab/util.hpp"
#include "erdoslab/version.hpp"

namespace erdoslab {

namespace {

constexpr uint64_t kRangeChunk = 1024;

void require_interval_coverage(const PrimeTable& table, uint64_t n_hi, const char* where) {
    // Seeing all of (n, 2n) for n up to n_hi needs primes through 2*n_hi - 1.
    if (table.limit() < 2 * n_hi - 1)
        throw coverage_error(std::string(where) + ": table limit " +
                             std::to_string(table.limit()) + " below required " +
                             std::to_string(2 * n_hi - 1));
}

size_t first_prime_greater(const std::vector<uint64_t>& primes, uint64_t x) {
    return static_cast<size_t>(
        std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

RangeCertificate finish_certificate(Statement st, uint64_t n_lo, uint64_t n_hi,
                                    std::vector<LemmaReport> reports,
                                    std::chrono::steady_clock::time_point t0) {
    RangeCertificate rc;
    rc.statement = st;
    rc.n_lo = n_lo;
    rc.n_hi = n_hi;
    rc.anomalies = std::move(reports);
    rc.all_pass = rc.anomalies.empty();
    rc.method = Method::exact;
    rc.tool_version = kToolVersion;
    rc.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return rc;
}

}  // namespace

uint64_t bertrand_prime(uint64_t n, const PrimeTable& table) {
    if (n < 2)
        throw std::domain_error("bertrand_prime: n must be >= 2, got " + std::to_string(n));
    require_interval_coverage(table, n, "bertrand_prime");

    const auto& primes = table.primes();
    const size_t i = first_prime_greater(primes, n);
    if (i < primes.size() && primes[i] < 2 * n) return primes[i];
    throw postulate_violation("bertrand_prime: no prime in (" + std::to_string(n) + ", " +
                              std::to_string(2 * n) + ")");
}

RangeCertificate verify_bertrand_range(uint64_t n_lo, uint64_t n_hi, const PrimeTable& table,
                                       unsigned workers, bool classic_form) {
    const uint64_t min_lo = classic_form ? 4 : 2;
    if (n_lo < min_lo)
        throw std::domain_error("verify_bertrand_range: range start must be >= " +
                                std::to_string(min_lo) + (classic_form ? " in classic form" : ""));
    if (n_hi < n_lo)
        throw std::domain_error("verify_bertrand_range: empty range (n_hi < n_lo)");
    require_interval_coverage(table, n_hi, "verify_bertrand_range");

    const auto t0 = std::chrono::steady_clock::now();
    const auto& primes = table.primes();
    // In classic form the upper end is 2n - 2; a next prime r fails n when
    // r >= 2n - slack, i.e. n <= (r + slack) / 2.
    const uint64_t slack = classic_form ? 2 : 0;

    std::vector<std::vector<LemmaReport>> slots(chunk_count(n_lo, n_hi, kRangeChunk));
    for_each_chunk(n_lo, n_hi, kRangeChunk, workers, [&](const ChunkRange& c) {
        auto& out = slots[c.index];
        // Walk n through the chunk; all n sharing the same next prime form
        // a block, so the scan advances prime by prime, not n by n.
        uint64_t n = c.lo;
        size_t i = first_prime_greater(primes, n);
        while (n <= c.hi) {
            if (i < primes.size() && primes[i] == n) ++i;
            if (i >= primes.size()) {
                // Cannot happen with validated coverage; kept as a hard stop.
                throw postulate_violation("verify_bertrand_range: ran out of primes at n = " +
                                          std::to_string(n));
            }
            const uint64_t r = primes[i];  // next prime after every n in this block
            const uint64_t block_hi = std::min(c.hi, r - 1);
            // Violations are the n in this block with 2n - slack <= r.
            const uint64_t viol_hi = std::min(block_hi, (r + slack) / 2);
            for (uint64_t v = n; v <= viol_hi; ++v) {
                Witness w;
                w.p = r;
                w.values["next_prime"] = std::to_string(r);
                w.values["interval_end"] = std::to_string(2 * v - slack);
                out.push_back({Statement::bertrand_range, v, CheckStatus::fail, Method::exact,
                               std::move(w)});
            }
            n = block_hi + 1;
        }
    });

    std::vector<LemmaReport> merged;
    for (auto& s : slots)
        for (auto& r : s) merged.push_back(std::move(r));
    return finish_certificate(Statement::bertrand_range, n_lo, n_hi, std::move(merged), t0);
}

TwoPrimesMod4 two_primes_mod4(uint64_t n, const PrimeTable& table) {
    if (n < 2)
        throw std::domain_error("two_primes_mod4: n must be >= 2, got " + std::to_string(n));
    require_interval_coverage(table, n, "two_primes_mod4");

    const auto& primes = table.primes();
    TwoPrimesMod4 result;
    result.n = n;
    for (size_t i = first_prime_greater(primes, n);
         i < primes.size() && primes[i] < 2 * n; ++i) {
        const uint64_t p = primes[i];
        if (p % 4 == 3 && !result.prime_3_mod_4) result.prime_3_mod_4 = p;
        if (p % 4 == 1 && !result.prime_1_mod_4) result.prime_1_mod_4 = p;
        if (result.found()) break;
    }
    return result;
}

RangeCertificate verify_two_primes_range(uint64_t n_lo, uint64_t n_hi,
                                         const PrimeTable& table, unsigned workers) {
    if (n_lo < 2)
        throw std::domain_error("verify_two_primes_range: range start must be >= 2");
    if (n_hi < n_lo)
        throw std::domain_error("verify_two_primes_range: empty range (n_hi < n_lo)");
    require_interval_coverage(table, n_hi, "verify_two_primes_range");

    const auto t0 = std::chrono::steady_clock::now();
    // Split the prime list by residue once; per-n lookups are then two
    // binary searches.
    std::vector<uint64_t> res3, res1;
    for (uint64_t p : table.primes()) {
        if (p % 4 == 3) res3.push_back(p);
        else if (p % 4 == 1) res1.push_back(p);
    }

    auto first_in_interval = [](const std::vector<uint64_t>& v, uint64_t n)
        -> std::optional<uint64_t> {
        auto it = std::upper_bound(v.begin(), v.end(), n);
        if (it != v.end() && *it < 2 * n) return *it;
        return std::nullopt;
    };

    std::vector<std::vector<LemmaReport>> slots(chunk_count(n_lo, n_hi, kRangeChunk));
    for_each_chunk(n_lo, n_hi, kRangeChunk, workers, [&](const ChunkRange& c) {
        auto& out = slots[c.index];
        for (uint64_t n = c.lo; n <= c.hi; ++n) {
            const auto p3 = first_in_interval(res3, n);
            const auto p1 = first_in_interval(res1, n);
            if (p3 && p1) continue;
            Witness w;
            w.values["missing_residue"] = !p3 && !p1 ? "both" : (!p3 ? "3" : "1");
            if (p3) w.values["prime_3_mod_4"] = std::to_string(*p3);
            if (p1) w.values["prime_1_mod_4"] = std::to_string(*p1);
            const CheckStatus status =
                n <= kTwoPrimesMod4Threshold ? CheckStatus::anomaly : CheckStatus::fail;
            out.push_back({Statement::two_primes_mod4, n, status, Method::exact, std::move(w)});
        }
    });

    std::vector<LemmaReport> merged;
    for (auto& s : slots)
        for (auto& r : s) merged.push_back(std::move(r));
    return finish_certificate(Statement::two_primes_mod4, n_lo, n_hi, std::move(merged), t0);
}

LadderChain greedy_ladder(uint64_t target, const PrimeTable& table) {
    if (target < 2)
        throw std::domain_error("greedy_ladder: target must be >= 2, got " +
                                std::to_string(target));
    if (table.limit() < 2 * target)
        throw coverage_error("greedy_ladder: table limit " + std::to_string(table.limit()) +
                             " below required " + std::to_string(2 * target));

    const auto& primes = table.primes();
    LadderChain chain;
    chain.coverage_target = target;
    chain.primes.push_back(2);
    while (chain.primes.back() <= target) {
        const uint64_t cur = chain.primes.back();
        // Largest prime strictly below 2*cur.
        const size_t i = first_prime_greater(primes, 2 * cur - 1);
        assert(i > 0);
        const uint64_t next = primes[i - 1];
        if (next <= cur)
            throw postulate_violation("greedy_ladder: no prime in (" + std::to_string(cur) +
                                      ", " + std::to_string(2 * cur) + ")");
        chain.primes.push_back(next);
    }
    return chain;
}

LadderCheck verify_ladder(const LadderChain& chain, uint64_t empirical_limit) {
    const auto& ps = chain.primes;
    if (ps.empty()) return {false, std::nullopt, "chain is empty"};
    if (ps.front() != 2) return {false, 0, "chain must start at 2"};

    for (size_t i = 0; i < ps.size(); ++i) {
        if (!trial_is_prime(ps[i]))
            return {false, i, std::to_string(ps[i]) + " is not prime"};
        if (i > 0 && ps[i] <= ps[i - 1])
            return {false, i, "chain is not strictly increasing at " + std::to_string(ps[i])};
        if (i > 0 && ps[i] >= 2 * ps[i - 1])
            return {false, i,
                    std::to_string(ps[i]) + " is not below double its predecessor " +
                        std::to_string(ps[i - 1])};
    }
    if (ps.back() <= chain.coverage_target)
        return {false, ps.size() - 1,
                "last element " + std::to_string(ps.back()) +
                    " does not pass the coverage target " +
                    std::to_string(chain.coverage_target)};

    // The doubling structure already implies coverage; small targets get the
    // exhaustive scan anyway.
    if (chain.coverage_target <= empirical_limit) {
        for (uint64_t n = 2; n <= chain.coverage_target; ++n) {
            auto it = std::upper_bound(ps.begin(), ps.end(), n);
            if (it == ps.end() || *it >= 2 * n)
                return {false, std::nullopt,
                        "no chain prime in (" + std::to_string(n) + ", " +
                            std::to_string(2 * n) + ")"};
        }
    }
    return {true, std::nullopt, ""};
}

const LadderChain& reference_ladder() {
    static const LadderChain chain{
        {2, 3, 5, 7, 13, 23, 43, 83, 163, 317, 631, 1259, 2503, 4001}, 4000};
    return chain;
}

}  // namespace erdoslab
