#include "erdoslab/lemmas.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "erdoslab/errors.hpp"
#include "erdoslab/parallel.hpp"
#include "erdoslab/util.hpp"
#include "erdoslab/valuations.hpp"
#include "erdoslab/version.hpp"

namespace erdoslab {

namespace {

using i128 = __int128;

std::string i128_str(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void require_min_n(uint64_t n, uint64_t min_n, const char* where) {
    if (n < min_n)
        throw std::domain_error(std::string(where) + ": n must be >= " +
                                std::to_string(min_n) + ", got " + std::to_string(n));
}

void require_coverage(const PrimeTable& table, uint64_t needed, const char* where) {
    if (table.limit() < needed)
        throw coverage_error(std::string(where) + ": table limit " +
                             std::to_string(table.limit()) + " below required " +
                             std::to_string(needed));
}

LemmaReport pass_report(Statement st, uint64_t n, Method m) {
    return {st, n, CheckStatus::pass, m, std::nullopt};
}

LemmaReport fail_report(Statement st, uint64_t n, Method m, Witness w) {
    return {st, n, CheckStatus::fail, m, std::move(w)};
}

// Index of the first prime >= x in the table's packed list.
size_t first_prime_at_least(const std::vector<uint64_t>& primes, uint64_t x) {
    return static_cast<size_t>(
        std::lower_bound(primes.begin(), primes.end(), x) - primes.begin());
}

}  // namespace

LemmaReport check_chebyshev(uint64_t n, const PrimeTable& table, const VerifyConfig& cfg) {
    require_min_n(n, 2, "check_chebyshev");
    require_coverage(table, n, "check_chebyshev");

    if (n <= cfg.exact_primorial_limit) {
        BigNat prim = primorial(n, table);
        BigNat bound = BigNat::two_pow(2 * n);
        if (prim.cmp(bound) <= 0)
            return pass_report(Statement::chebyshev_bound, n, Method::exact);
        Witness w;
        w.values["primorial"] = prim.to_decimal();
        w.values["four_pow_n"] = bound.to_decimal();
        return fail_report(Statement::chebyshev_bound, n, Method::exact, std::move(w));
    }

    // Certified: sum of upper log2 bounds over primes <= n must stay at or
    // below 2n. The bound 2n is exact in log2, so rounding the sum up can
    // only turn a true pass into a fail, never the reverse.
    i128 sum_upper = 0;
    for (uint64_t p : table.primes()) {
        if (p > n) break;
        sum_upper += scaled_log2(p, cfg.log_slack_rel).upper;
    }
    const i128 bound = static_cast<i128>(2 * n) * kLog2UnitScale;
    if (sum_upper <= bound)
        return pass_report(Statement::chebyshev_bound, n, Method::certified_rounding);
    Witness w;
    w.values["sum_log2_upper_units"] = i128_str(sum_upper);
    w.values["bound_units"] = i128_str(bound);
    return fail_report(Statement::chebyshev_bound, n, Method::certified_rounding, std::move(w));
}

LemmaReport check_pb_le_2n(uint64_t n, const PrimeTable& table) {
    require_min_n(n, 1, "check_pb_le_2n");
    require_coverage(table, 2 * n, "check_pb_le_2n");

    const uint64_t two_n = 2 * n;
    for (uint64_t p : table.primes()) {
        if (p > two_n) break;
        const uint64_t b = detail::central_binom_unchecked(n, p);
        if (b == 0) continue;
        uint64_t pb = 1;
        bool exceeds = false;
        for (uint64_t i = 0; i < b; ++i) {
            pb *= p;
            if (pb > two_n) {
                exceeds = true;
                break;
            }
        }
        if (exceeds) {
            Witness w;
            w.p = p;
            w.values["b"] = std::to_string(b);
            w.values["p_pow_b"] = BigNat::pow(BigNat{p}, b).to_decimal();
            return fail_report(Statement::pb_le_2n, n, Method::exact, std::move(w));
        }
    }
    return pass_report(Statement::pb_le_2n, n, Method::exact);
}

LemmaReport check_b_le_1(uint64_t n, const PrimeTable& table) {
    require_min_n(n, 1, "check_b_le_1");
    require_coverage(table, 2 * n, "check_b_le_1");

    const uint64_t two_n = 2 * n;
    const auto& primes = table.primes();
    // Only primes with p*p > 2n qualify; start just past sqrt(2n).
    for (size_t i = first_prime_at_least(primes, isqrt(two_n) + 1); i < primes.size(); ++i) {
        const uint64_t p = primes[i];
        if (p >= two_n) break;
        const uint64_t b = detail::central_binom_unchecked(n, p);
        if (b > 1) {
            Witness w;
            w.p = p;
            w.values["b"] = std::to_string(b);
            return fail_report(Statement::b_le_1, n, Method::exact, std::move(w));
        }
    }
    return pass_report(Statement::b_le_1, n, Method::exact);
}

LemmaReport check_b_eq_0(uint64_t n, const PrimeTable& table) {
    require_min_n(n, 1, "check_b_eq_0");
    require_coverage(table, n, "check_b_eq_0");

    const uint64_t two_n = 2 * n;
    const auto& primes = table.primes();
    std::vector<std::pair<uint64_t, uint64_t>> violations;
    // Qualifying primes: 3p > 2n and p <= n, i.e. p > floor(2n/3).
    for (size_t i = first_prime_at_least(primes, two_n / 3 + 1); i < primes.size(); ++i) {
        const uint64_t p = primes[i];
        if (p > n) break;
        const uint64_t b = detail::central_binom_unchecked(n, p);
        if (b != 0) violations.emplace_back(p, b);
    }
    if (violations.empty())
        return pass_report(Statement::b_eq_0, n, Method::exact);

    Witness w;
    w.p = violations.front().first;
    w.values["b"] = std::to_string(violations.front().second);
    // The single documented exception: at n = 2 the prime 2 lands in the
    // qualifying range and carries exponent 1 into binomial(4,2) = 6.
    if (n == 2 && violations.size() == 1 && violations.front() == std::pair<uint64_t, uint64_t>{2, 1})
        return {Statement::b_eq_0, n, CheckStatus::anomaly, Method::exact, std::move(w)};
    return fail_report(Statement::b_eq_0, n, Method::exact, std::move(w));
}

LemmaReport check_lower_bound(uint64_t n, const PrimeTable& table, const VerifyConfig& cfg) {
    require_min_n(n, 1, "check_lower_bound");

    if (n <= cfg.exact_binomial_limit) {
        BigNat lhs = central_binomial(n, cfg.exact_binomial_limit);
        lhs.mul_u64(2 * n);
        BigNat rhs = BigNat::two_pow(2 * n);
        if (lhs.cmp(rhs) > 0)
            return pass_report(Statement::lower_bound, n, Method::exact);
        Witness w;
        w.values["lhs"] = lhs.to_decimal();
        w.values["rhs"] = rhs.to_decimal();
        return fail_report(Statement::lower_bound, n, Method::exact, std::move(w));
    }

    // Certified: lower bounds of log2(2n) plus the full prime-power content
    // of binomial(2n,n) must exceed 2n. Rounding down can only lose passes.
    require_coverage(table, 2 * n, "check_lower_bound");
    i128 sum_lower = scaled_log2(2 * n, cfg.log_slack_rel).lower;
    for (uint64_t p : table.primes()) {
        if (p > 2 * n) break;
        const uint64_t b = detail::central_binom_unchecked(n, p);
        if (b > 0)
            sum_lower += static_cast<i128>(b) * scaled_log2(p, cfg.log_slack_rel).lower;
    }
    const i128 bound = static_cast<i128>(2 * n) * kLog2UnitScale;
    if (sum_lower > bound)
        return pass_report(Statement::lower_bound, n, Method::certified_rounding);
    Witness w;
    w.values["sum_log2_lower_units"] = i128_str(sum_lower);
    w.values["bound_units"] = i128_str(bound);
    return fail_report(Statement::lower_bound, n, Method::certified_rounding, std::move(w));
}

LemmaReport check_final_inequality(uint64_t n) {
    require_min_n(n, 2, "check_final_inequality");

    const uint64_t two_n = 2 * n;
    const uint64_t s = ceil_sqrt(two_n);
    const uint64_t t = ceil_div(two_n, 3);
    const uint64_t lhs_exp = two_n - 2 * t;  // t <= (2n+2)/3 <= n for n >= 2

    // Fast certificate: (2n)^(s+1) <= 2^((s+1)*ceil_log2(2n)), so exponent
    // dominance alone settles most n.
    const auto rhs_exp_upper =
        static_cast<unsigned __int128>(s + 1) * ceil_log2(two_n);
    if (rhs_exp_upper <= lhs_exp)
        return pass_report(Statement::final_inequality, n, Method::certified_rounding);

    // Exact comparison of the rounded form; only reached for small n where
    // the numbers stay modest.
    BigNat lhs = BigNat::two_pow(lhs_exp);
    BigNat rhs = BigNat::pow(BigNat{two_n}, s + 1);
    if (lhs.cmp(rhs) >= 0)
        return pass_report(Statement::final_inequality, n, Method::certified_rounding);
    Witness w;
    w.values["sqrt_ceiling"] = std::to_string(s);
    w.values["two_thirds_ceiling"] = std::to_string(t);
    w.values["lhs"] = lhs.to_decimal();
    w.values["rhs"] = rhs.to_decimal();
    return fail_report(Statement::final_inequality, n, Method::certified_rounding, std::move(w));
}

uint64_t min_supported_n(Statement lemma) {
    switch (lemma) {
        case Statement::chebyshev_bound:
        case Statement::final_inequality:
            return 2;
        case Statement::pb_le_2n:
        case Statement::b_le_1:
        case Statement::b_eq_0:
        case Statement::lower_bound:
            return 1;
        default:
            throw std::domain_error("min_supported_n: statement has no per-n checker");
    }
}

uint64_t required_table_limit(Statement lemma, uint64_t n_hi, const VerifyConfig& cfg) {
    switch (lemma) {
        case Statement::chebyshev_bound:
        case Statement::b_eq_0:
            return std::max<uint64_t>(n_hi, 2);
        case Statement::pb_le_2n:
        case Statement::b_le_1:
            return 2 * n_hi;
        case Statement::lower_bound:
            return n_hi <= cfg.exact_binomial_limit ? 2 : 2 * n_hi;
        case Statement::final_inequality:
            return 2;
        default:
            throw std::domain_error("required_table_limit: statement has no per-n checker");
    }
}

namespace {

struct ChunkSlot {
    std::vector<LemmaReport> reports;
    bool used_certified = false;
};

void keep_if_not_pass(LemmaReport r, std::vector<LemmaReport>& out) {
    if (r.status != CheckStatus::pass) out.push_back(std::move(r));
}

// Incremental scanner for the primorial bound: maintains the running
// product (exact zone) or the running upper log sum (certified zone)
// across the chunk instead of recomputing per n.
void scan_chebyshev(const ChunkRange& c, const PrimeTable& table, const VerifyConfig& cfg,
                    ChunkSlot& slot) {
    const auto& primes = table.primes();
    uint64_t n = c.lo;

    if (n <= cfg.exact_primorial_limit) {
        const uint64_t exact_hi = std::min(c.hi, cfg.exact_primorial_limit);
        BigNat prim{1};
        for (uint64_t p : primes) {
            if (p >= n) break;
            prim.mul_u64(p);
        }
        BigNat bound = BigNat::two_pow(2 * n);
        size_t pi = first_prime_at_least(primes, n);
        for (; n <= exact_hi; ++n) {
            if (pi < primes.size() && primes[pi] == n) {
                prim.mul_u64(n);
                ++pi;
            }
            if (prim.cmp(bound) > 0) {
                Witness w;
                w.values["primorial"] = prim.to_decimal();
                w.values["four_pow_n"] = bound.to_decimal();
                slot.reports.push_back(
                    fail_report(Statement::chebyshev_bound, n, Method::exact, std::move(w)));
            }
            bound.shl(2);
        }
    }

    if (n > c.hi) return;
    slot.used_certified = true;
    i128 sum_upper = 0;
    for (uint64_t p : primes) {
        if (p >= n) break;
        sum_upper += scaled_log2(p, cfg.log_slack_rel).upper;
    }
    size_t pi = first_prime_at_least(primes, n);
    for (; n <= c.hi; ++n) {
        if (pi < primes.size() && primes[pi] == n) {
            sum_upper += scaled_log2(n, cfg.log_slack_rel).upper;
            ++pi;
        }
        const i128 bound = static_cast<i128>(2 * n) * kLog2UnitScale;
        if (sum_upper > bound) {
            Witness w;
            w.values["sum_log2_upper_units"] = i128_str(sum_upper);
            w.values["bound_units"] = i128_str(bound);
            slot.reports.push_back(fail_report(Statement::chebyshev_bound, n,
                                               Method::certified_rounding, std::move(w)));
        }
    }
}

// Incremental scanner for the central-binomial growth bound.
void scan_lower_bound(const ChunkRange& c, const PrimeTable& table, const VerifyConfig& cfg,
                      ChunkSlot& slot) {
    uint64_t n = c.lo;

    if (n <= cfg.exact_binomial_limit) {
        const uint64_t exact_hi = std::min(c.hi, cfg.exact_binomial_limit);
        BigNat binom = central_binomial(n, cfg.exact_binomial_limit);
        BigNat rhs = BigNat::two_pow(2 * n);
        for (; n <= exact_hi; ++n) {
            BigNat lhs = binom;
            lhs.mul_u64(2 * n);
            if (lhs.cmp(rhs) <= 0) {
                Witness w;
                w.values["lhs"] = lhs.to_decimal();
                w.values["rhs"] = rhs.to_decimal();
                slot.reports.push_back(
                    fail_report(Statement::lower_bound, n, Method::exact, std::move(w)));
            }
            binom.mul_u64(2 * (2 * n + 1));
            binom.divexact_u64(n + 1);
            rhs.shl(2);
        }
    }

    for (; n <= c.hi; ++n) {
        slot.used_certified = true;
        keep_if_not_pass(check_lower_bound(n, table, cfg), slot.reports);
    }
}

void scan_per_n(Statement lemma, const ChunkRange& c, const PrimeTable& table,
                ChunkSlot& slot) {
    for (uint64_t n = c.lo; n <= c.hi; ++n) {
        switch (lemma) {
            case Statement::pb_le_2n:
                keep_if_not_pass(check_pb_le_2n(n, table), slot.reports);
                break;
            case Statement::b_le_1:
                keep_if_not_pass(check_b_le_1(n, table), slot.reports);
                break;
            case Statement::b_eq_0:
                keep_if_not_pass(check_b_eq_0(n, table), slot.reports);
                break;
            case Statement::final_inequality:
                slot.used_certified = true;
                keep_if_not_pass(check_final_inequality(n), slot.reports);
                break;
            default:
                assert(false);
        }
    }
}

}  // namespace

RangeCertificate check_range(Statement lemma, uint64_t n_lo, uint64_t n_hi,
                             const PrimeTable& table, unsigned workers,
                             const VerifyConfig& cfg) {
    const uint64_t min_n = min_supported_n(lemma);  // also rejects non-lemma statements
    if (n_lo < min_n)
        throw std::domain_error("check_range: range start " + std::to_string(n_lo) +
                                " below smallest supported n " + std::to_string(min_n));
    if (n_hi < n_lo)
        throw std::domain_error("check_range: empty range (n_hi < n_lo)");
    if (cfg.chunk_size == 0)
        throw std::domain_error("check_range: chunk_size must be positive");
    require_coverage(table, required_table_limit(lemma, n_hi, cfg), "check_range");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ChunkSlot> slots(chunk_count(n_lo, n_hi, cfg.chunk_size));

    for_each_chunk(n_lo, n_hi, cfg.chunk_size, workers, [&](const ChunkRange& c) {
        ChunkSlot& slot = slots[c.index];
        switch (lemma) {
            case Statement::chebyshev_bound:
                scan_chebyshev(c, table, cfg, slot);
                break;
            case Statement::lower_bound:
                scan_lower_bound(c, table, cfg, slot);
                break;
            default:
                scan_per_n(lemma, c, table, slot);
                break;
        }
    });

    RangeCertificate rc;
    rc.statement = lemma;
    rc.n_lo = n_lo;
    rc.n_hi = n_hi;
    rc.tool_version = kToolVersion;
    bool certified = false;
    for (auto& slot : slots) {
        certified = certified || slot.used_certified;
        for (auto& r : slot.reports) rc.anomalies.push_back(std::move(r));
    }
    rc.method = certified ? Method::certified_rounding : Method::exact;
    rc.all_pass = rc.anomalies.empty();
    rc.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return rc;
}

uint64_t certified_crossover(uint64_t sweep_hi, unsigned workers, const VerifyConfig& cfg) {
    if (sweep_hi < 2)
        throw std::domain_error("certified_crossover: sweep_hi must be >= 2");
    const PrimeTable tiny = PrimeTable::build(2);
    const RangeCertificate rc =
        check_range(Statement::final_inequality, 2, sweep_hi, tiny, workers, cfg);
    uint64_t last_fail = 0;
    for (const auto& r : rc.anomalies)
        if (r.status == CheckStatus::fail && r.n > last_fail) last_fail = r.n;
    return last_fail == 0 ? 2 : last_fail + 1;
}

}  // namespace erdoslab
