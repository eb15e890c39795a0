#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace erdoslab {

// Every checkable statement the toolkit knows about. Range verifiers and
// certificates are tagged with one of these.
enum class Statement {
    chebyshev_bound,   // product of primes <= n is at most 4^n
    pb_le_2n,          // p^b(n,p) <= 2n for every prime p
    b_le_1,            // b(n,p) <= 1 once p*p > 2n
    b_eq_0,            // b(n,p) == 0 for 2n/3 < p <= n
    lower_bound,       // 2n * binomial(2n,n) > 4^n
    final_inequality,  // 4^n outgrows the small-prime contribution bound
    bertrand_range,    // a prime exists in (n, 2n)
    ladder,            // doubling prime chain validity
    two_primes_mod4,   // (n,2n) holds primes in both odd residue classes mod 4
    ruth_aaron,        // consecutive integers with equal sums of prime factors
    abundant_density,  // count of n with sigma(n) > 2n below a limit
};

enum class CheckStatus {
    pass,
    fail,
    anomaly,  // expected, documented exception (not a verification failure)
};

enum class Method {
    exact,              // fully materialized integer arithmetic
    certified_rounding, // integer-scaled log bounds with outward slack
};

std::string_view to_string(Statement s);
std::string_view to_string(CheckStatus s);
std::string_view to_string(Method m);
bool statement_from_string(std::string_view name, Statement& out);
bool status_from_string(std::string_view name, CheckStatus& out);
bool method_from_string(std::string_view name, Method& out);

// Concrete evidence attached to a non-pass report: the offending prime (0
// when no single prime is involved) plus named values, all as decimal
// strings so nothing is ever rounded on the way out.
struct Witness {
    uint64_t p = 0;
    std::map<std::string, std::string> values;
    bool operator==(const Witness&) const = default;
};

// Outcome of checking one statement at one n.
struct LemmaReport {
    Statement statement;
    uint64_t n = 0;
    CheckStatus status = CheckStatus::pass;
    Method method = Method::exact;
    std::optional<Witness> witness;
    bool operator==(const LemmaReport&) const = default;
};

// Outcome of checking one statement across [n_lo, n_hi]. Only non-pass
// reports are retained, in ascending n; `all_pass` means that list is empty.
struct RangeCertificate {
    Statement statement;
    uint64_t n_lo = 0;
    uint64_t n_hi = 0;
    bool all_pass = false;
    std::vector<LemmaReport> anomalies;
    Method method = Method::exact;
    std::string tool_version;
    std::chrono::microseconds elapsed{0};

    // True when nothing in the range has status fail (anomalies allowed).
    bool no_failures() const;
};

}  // namespace erdoslab
