// Command-line front end: every subcommand builds whatever prime table it
// needs, runs one verification or enumeration, and emits a canonical JSON
// certificate (or RFC 4180 CSV for the enumeration commands).
//
// Exit codes: 0 = verified (documented anomalies allowed), 1 = a checked
// statement actually failed (or a certificate is invalid), 2 = bad usage,
// unreadable input, or a resource/coverage limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "erdoslab/bertrand.hpp"
#include "erdoslab/bignat.hpp"
#include "erdoslab/certificate.hpp"
#include "erdoslab/errors.hpp"
#include "erdoslab/extras.hpp"
#include "erdoslab/lemmas.hpp"
#include "erdoslab/prime_table.hpp"
#include "erdoslab/util.hpp"
#include "erdoslab/version.hpp"

namespace {

using namespace erdoslab;
using nlohmann::json;

struct CommonOpts {
    unsigned jobs = 0;  // 0 = one per hardware thread
    bool no_timestamp = false;
    std::string out;
    uint64_t sieve_budget = PrimeTable::kDefaultBudget;

    unsigned resolved_jobs() const {
        if (jobs > 0) return jobs;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_jobs = true) {
    if (with_jobs)
        cmd->add_option("-j,--jobs", o.jobs, "Worker threads (0 = auto)")
            ->envname("ERDOSLAB_JOBS");
    cmd->add_flag("--no-timestamp", o.no_timestamp,
                  "Omit timestamps and timings for byte-reproducible output");
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
    cmd->add_option("--sieve-budget", o.sieve_budget,
                    "Largest prime-table limit this run may allocate")
        ->envname("ERDOSLAB_SIEVE_BUDGET");
}

// Writes bytes exactly as given to --out or stdout.
void deliver_raw(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw std::runtime_error("failed writing output file: " + out_path);
}

// Same, with a trailing newline appended (for one-line JSON certificates).
void deliver(const std::string& bytes, const std::string& out_path) {
    deliver_raw(bytes + "\n", out_path);
}

int deliver_certificate(const Certificate& cert, const CommonOpts& o) {
    deliver(emit_certificate(cert), o.out);
    return cert.pass ? 0 : 1;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Statement parse_lemma_name(const std::string& name) {
    Statement st;
    if (statement_from_string(name, st)) return st;
    if (name == "chebyshev") return Statement::chebyshev_bound;
    throw std::domain_error(
        "unknown lemma '" + name +
        "' (expected chebyshev_bound, pb_le_2n, b_le_1, b_eq_0, lower_bound or "
        "final_inequality)");
}

// ---- verify ----------------------------------------------------------

struct VerifyOpts {
    CommonOpts common;
    std::string lemma;
    uint64_t from = 0, to = 0;
    uint64_t exact_limit = kDefaultExactPrimorialLimit;
    double log_slack = kDefaultLogSlackRel;
};

int run_verify(const VerifyOpts& o) {
    const Statement st = parse_lemma_name(o.lemma);
    VerifyConfig cfg;
    cfg.exact_primorial_limit = o.exact_limit;
    cfg.exact_binomial_limit = o.exact_limit;
    cfg.log_slack_rel = o.log_slack;

    const uint64_t table_limit = required_table_limit(st, o.to, cfg);
    const PrimeTable table = PrimeTable::build(table_limit, o.common.sieve_budget);
    const RangeCertificate rc =
        check_range(st, o.from, o.to, table, o.common.resolved_jobs(), cfg);

    Certificate cert = make_certificate(
        st, {{"from", std::to_string(o.from)}, {"to", std::to_string(o.to)}},
        rc.no_failures(), range_payload(rc, !o.common.no_timestamp), rc.method,
        !o.common.no_timestamp);
    return deliver_certificate(cert, o.common);
}

// ---- bertrand / two-primes --------------------------------------------

struct IntervalOpts {
    CommonOpts common;
    uint64_t from = 0, to = 0;
    bool classic_form = false;
};

int run_bertrand(const IntervalOpts& o) {
    const PrimeTable table = PrimeTable::build(2 * o.to, o.common.sieve_budget);
    const RangeCertificate rc = verify_bertrand_range(o.from, o.to, table,
                                                      o.common.resolved_jobs(), o.classic_form);
    Certificate cert = make_certificate(
        Statement::bertrand_range,
        {{"from", std::to_string(o.from)},
         {"to", std::to_string(o.to)},
         {"classic_form", o.classic_form ? "true" : "false"}},
        rc.no_failures(), range_payload(rc, !o.common.no_timestamp), rc.method,
        !o.common.no_timestamp);
    return deliver_certificate(cert, o.common);
}

int run_two_primes(const IntervalOpts& o) {
    const PrimeTable table = PrimeTable::build(2 * o.to, o.common.sieve_budget);
    const RangeCertificate rc =
        verify_two_primes_range(o.from, o.to, table, o.common.resolved_jobs());
    Certificate cert = make_certificate(
        Statement::two_primes_mod4,
        {{"from", std::to_string(o.from)},
         {"to", std::to_string(o.to)},
         {"anomaly_threshold", std::to_string(kTwoPrimesMod4Threshold)}},
        rc.no_failures(), range_payload(rc, !o.common.no_timestamp), rc.method,
        !o.common.no_timestamp);
    return deliver_certificate(cert, o.common);
}

// ---- ladder ------------------------------------------------------------

struct LadderOpts {
    CommonOpts common;
    uint64_t target = 0;
    bool verify_paper = false;
    std::string verify_file;
};

LadderChain ladder_from_json(const json& j) {
    const json* src = &j;
    // Accept either a bare chain object or a full certificate wrapping one.
    if (j.contains("result") && j["result"].is_object() &&
        j["result"].contains("payload"))
        src = &j["result"]["payload"];
    if (!src->is_object() || !src->contains("primes") || !(*src)["primes"].is_array())
        throw std::domain_error("ladder file needs a 'primes' array");

    LadderChain chain;
    for (const auto& v : (*src)["primes"]) {
        if (v.is_string())
            chain.primes.push_back(BigNat::from_decimal(v.get<std::string>()).to_u64());
        else if (v.is_number_unsigned())
            chain.primes.push_back(v.get<uint64_t>());
        else
            throw std::domain_error("ladder primes must be decimal strings or integers");
    }
    if (src->contains("coverage_target")) {
        const auto& t = (*src)["coverage_target"];
        chain.coverage_target = t.is_string()
                                    ? BigNat::from_decimal(t.get<std::string>()).to_u64()
                                    : t.get<uint64_t>();
    } else if (!chain.primes.empty()) {
        chain.coverage_target = chain.primes.back() - 1;
    }
    return chain;
}

int run_ladder(const LadderOpts& o) {
    LadderChain chain;
    std::string source;
    if (o.verify_paper) {
        chain = reference_ladder();
        source = "reference";
    } else if (!o.verify_file.empty()) {
        json j = json::parse(read_file(o.verify_file), nullptr, false);
        if (j.is_discarded())
            throw std::domain_error("ladder file is not valid JSON: " + o.verify_file);
        chain = ladder_from_json(j);
        source = "file";
    } else {
        const PrimeTable table = PrimeTable::build(2 * o.target, o.common.sieve_budget);
        chain = greedy_ladder(o.target, table);
        source = "greedy";
    }

    const LadderCheck check = verify_ladder(chain);

    json payload = json::object();
    json primes = json::array();
    for (uint64_t p : chain.primes) primes.push_back(std::to_string(p));
    payload["primes"] = std::move(primes);
    payload["coverage_target"] = std::to_string(chain.coverage_target);
    payload["valid"] = check.valid;
    if (!check.valid) {
        payload["reason"] = check.reason;
        if (check.violation_index)
            payload["violation_index"] = std::to_string(*check.violation_index);
    }

    Certificate cert = make_certificate(
        Statement::ladder,
        {{"source", source}, {"target", std::to_string(chain.coverage_target)}},
        check.valid, std::move(payload), Method::exact, !o.common.no_timestamp);
    return deliver_certificate(cert, o.common);
}

// ---- ruth-aaron / abundant ----------------------------------------------

struct LimitOpts {
    CommonOpts common;
    uint64_t limit = 0;
    bool distinct = false;
    std::string cert_path;
};

int run_ruth_aaron(const LimitOpts& o) {
    const SopfMode mode = o.distinct ? SopfMode::distinct : SopfMode::with_multiplicity;
    const uint64_t table_limit = std::max<uint64_t>(2, ceil_sqrt(o.limit + 1));
    const PrimeTable table = PrimeTable::build(table_limit, o.common.sieve_budget);
    const auto pairs = ruth_aaron_pairs(o.limit, mode, table, o.common.resolved_jobs());

    std::string csv = "n,next,sum\r\n";
    for (const auto& p : pairs)
        csv += std::to_string(p.n) + "," + std::to_string(p.n + 1) + "," +
               std::to_string(p.sum) + "\r\n";
    deliver_raw(csv, o.common.out);

    if (!o.cert_path.empty()) {
        json payload = json::object();
        json list = json::array();
        for (const auto& p : pairs)
            list.push_back(json{{"n", std::to_string(p.n)}, {"sum", std::to_string(p.sum)}});
        payload["pairs"] = std::move(list);
        payload["count"] = std::to_string(pairs.size());
        Certificate cert = make_certificate(
            Statement::ruth_aaron,
            {{"limit", std::to_string(o.limit)},
             {"mode", o.distinct ? "distinct" : "with_multiplicity"}},
            true, std::move(payload), Method::exact, !o.common.no_timestamp);
        std::ofstream f(o.cert_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open certificate file: " + o.cert_path);
        emit_certificate(cert, f);
        f << "\n";
    }
    return 0;
}

int run_abundant(const LimitOpts& o) {
    const uint64_t table_limit = std::max<uint64_t>(2, ceil_sqrt(o.limit));
    const PrimeTable table = PrimeTable::build(table_limit, o.common.sieve_budget);
    const unsigned jobs = o.common.resolved_jobs();

    // One row per decade checkpoint plus the final limit; densities stay
    // exact integer pairs.
    std::vector<DensityEstimate> rows;
    for (uint64_t cp = 10; cp < o.limit; cp *= 10)
        rows.push_back(abundant_density(cp, table, jobs));
    rows.push_back(abundant_density(o.limit, table, jobs));

    std::string csv = "limit,abundant_count,density_num,density_den\r\n";
    for (const auto& d : rows)
        csv += std::to_string(d.limit) + "," + std::to_string(d.count) + "," +
               std::to_string(d.count) + "," + std::to_string(d.limit) + "\r\n";
    deliver_raw(csv, o.common.out);

    if (!o.cert_path.empty()) {
        const DensityEstimate& final_row = rows.back();
        json payload = json::object();
        json list = json::array();
        for (const auto& d : rows)
            list.push_back(json{{"limit", std::to_string(d.limit)},
                                {"count", std::to_string(d.count)}});
        payload["checkpoints"] = std::move(list);
        payload["count"] = std::to_string(final_row.count);
        payload["limit"] = std::to_string(final_row.limit);
        Certificate cert = make_certificate(
            Statement::abundant_density, {{"limit", std::to_string(o.limit)}}, true,
            std::move(payload), Method::exact, !o.common.no_timestamp);
        std::ofstream f(o.cert_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open certificate file: " + o.cert_path);
        emit_certificate(cert, f);
        f << "\n";
    }
    return 0;
}

// ---- cert validate ------------------------------------------------------

int run_cert_validate(const std::string& path) {
    std::string bytes;
    try {
        bytes = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        const Certificate cert = parse_certificate(bytes);
        const std::string reemitted = emit_certificate(cert);
        const Certificate reparsed = parse_certificate(reemitted);
        if (!(reparsed == cert)) {
            std::cerr << "invalid: certificate does not survive a parse/emit round trip\n";
            return 1;
        }
        // Ignore one trailing newline when judging canonical bytes.
        std::string trimmed = bytes;
        while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
            trimmed.pop_back();
        std::cout << "valid: statement=" << to_string(cert.statement)
                  << " pass=" << (cert.pass ? "true" : "false")
                  << " canonical=" << (trimmed == reemitted ? "true" : "false") << "\n";
        return 0;
    } catch (const certificate_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification toolkit for prime-gap results"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("erdoslab ") + kToolVersion);

    VerifyOpts vo;
    auto* verify = app.add_subcommand(
        "verify", "Check one supporting statement for every n in a range");
    verify->add_option("--lemma", vo.lemma, "Statement to check")->required();
    verify->add_option("--from", vo.from, "First n (inclusive)")->required();
    verify->add_option("--to", vo.to, "Last n (inclusive)")->required();
    verify->add_option("--exact-limit", vo.exact_limit,
                       "Largest n handled with fully materialized integers")
        ->envname("ERDOSLAB_EXACT_LIMIT");
    verify->add_option("--log-precision", vo.log_slack,
                       "Relative slack applied outward to log bounds")
        ->envname("ERDOSLAB_LOG_PRECISION");
    add_common(verify, vo.common);

    IntervalOpts bo;
    auto* bertrand = app.add_subcommand(
        "bertrand", "Verify a prime exists in (n, 2n) for every n in a range");
    bertrand->add_option("--from", bo.from, "First n (inclusive)")->required();
    bertrand->add_option("--to", bo.to, "Last n (inclusive)")->required();
    bertrand->add_flag("--classic-form", bo.classic_form,
                       "Check the interval (n, 2n-2) instead; needs --from > 3");
    add_common(bertrand, bo.common);

    IntervalOpts tpo;
    auto* two_primes = app.add_subcommand(
        "two-primes", "Verify (n, 2n) holds primes in both odd residue classes mod 4");
    two_primes->add_option("--from", tpo.from, "First n (inclusive)")->required();
    two_primes->add_option("--to", tpo.to, "Last n (inclusive)")->required();
    add_common(two_primes, tpo.common);

    LadderOpts lo;
    auto* ladder = app.add_subcommand(
        "ladder", "Build or validate a doubling chain of primes");
    auto* lt = ladder->add_option("--target", lo.target,
                                  "Build a greedy chain covering [2, target]");
    auto* lp = ladder->add_flag("--verify-paper", lo.verify_paper,
                                "Validate the built-in 14-step reference chain");
    auto* lf = ladder->add_option("--verify", lo.verify_file,
                                  "Validate a chain loaded from a JSON file");
    lt->excludes(lp)->excludes(lf);
    lp->excludes(lf);
    add_common(ladder, lo.common, /*with_jobs=*/false);

    LimitOpts ro;
    auto* ruth = app.add_subcommand(
        "ruth-aaron", "List consecutive pairs with equal sums of prime factors");
    ruth->add_option("--limit", ro.limit, "Largest n to scan")->required();
    ruth->add_flag("--distinct", ro.distinct,
                   "Sum each prime once instead of with multiplicity");
    ruth->add_option("--cert", ro.cert_path, "Also write a JSON certificate here");
    add_common(ruth, ro.common);

    LimitOpts ao;
    auto* abundant = app.add_subcommand(
        "abundant", "Count numbers with sigma(n) > 2n up to a limit");
    abundant->add_option("--limit", ao.limit, "Largest n to scan")->required();
    abundant->add_option("--cert", ao.cert_path, "Also write a JSON certificate here");
    add_common(abundant, ao.common);

    std::string cert_file;
    auto* cert = app.add_subcommand("cert", "Operate on stored certificates");
    cert->require_subcommand(1);
    auto* validate = cert->add_subcommand(
        "validate", "Parse a certificate and confirm it round-trips");
    validate->add_option("file", cert_file, "Certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0; any parse problem is usage
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (bertrand->parsed()) return run_bertrand(bo);
        if (two_primes->parsed()) return run_two_primes(tpo);
        if (ladder->parsed()) {
            if (!lo.verify_paper && lo.verify_file.empty() && lt->count() == 0)
                throw std::domain_error(
                    "ladder needs one of --target, --verify-paper or --verify");
            return run_ladder(lo);
        }
        if (ruth->parsed()) return run_ruth_aaron(ro);
        if (abundant->parsed()) return run_abundant(ao);
        if (cert->parsed() && validate->parsed()) return run_cert_validate(cert_file);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const postulate_violation& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
