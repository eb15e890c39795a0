#include "erdoslab/report.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace erdoslab {

namespace {

constexpr std::array<std::pair<Statement, std::string_view>, 11> kStatementNames{{
    {Statement::chebyshev_bound, "chebyshev_bound"},
    {Statement::pb_le_2n, "pb_le_2n"},
    {Statement::b_le_1, "b_le_1"},
    {Statement::b_eq_0, "b_eq_0"},
    {Statement::lower_bound, "lower_bound"},
    {Statement::final_inequality, "final_inequality"},
    {Statement::bertrand_range, "bertrand_range"},
    {Statement::ladder, "ladder"},
    {Statement::two_primes_mod4, "two_primes_mod4"},
    {Statement::ruth_aaron, "ruth_aaron"},
    {Statement::abundant_density, "abundant_density"},
}};

constexpr std::array<std::pair<CheckStatus, std::string_view>, 3> kStatusNames{{
    {CheckStatus::pass, "pass"},
    {CheckStatus::fail, "fail"},
    {CheckStatus::anomaly, "anomaly"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 2> kMethodNames{{
    {Method::exact, "exact"},
    {Method::certified_rounding, "certified_rounding"},
}};

template <typename Table, typename E>
std::string_view name_of(const Table& table, E e) {
    for (const auto& [k, v] : table)
        if (k == e) return v;
    return "unknown";
}

template <typename Table, typename E>
bool parse_name(const Table& table, std::string_view name, E& out) {
    for (const auto& [k, v] : table)
        if (v == name) {
            out = k;
            return true;
        }
    return false;
}

}  // namespace

std::string_view to_string(Statement s) { return name_of(kStatementNames, s); }
std::string_view to_string(CheckStatus s) { return name_of(kStatusNames, s); }
std::string_view to_string(Method m) { return name_of(kMethodNames, m); }

bool statement_from_string(std::string_view name, Statement& out) {
    return parse_name(kStatementNames, name, out);
}
bool status_from_string(std::string_view name, CheckStatus& out) {
    return parse_name(kStatusNames, name, out);
}
bool method_from_string(std::string_view name, Method& out) {
    return parse_name(kMethodNames, name, out);
}

bool RangeCertificate::no_failures() const {
    return std::none_of(anomalies.begin(), anomalies.end(), [](const LemmaReport& r) {
        return r.status == CheckStatus::fail;
    });
}

}  // namespace erdoslab
