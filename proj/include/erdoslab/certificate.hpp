#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "erdoslab/report.hpp"

namespace erdoslab {

// A certificate's bytes could not be parsed back into a valid certificate.
struct certificate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A machine-checkable verification result. Serialized canonically: keys
// sorted, no insignificant whitespace, every numeral a decimal string, so
// equal certificates are byte-identical.
struct Certificate {
    std::string schema_version;
    Statement statement = Statement::chebyshev_bound;
    std::map<std::string, std::string> parameters;  // inputs, as decimal strings
    bool pass = false;
    nlohmann::json payload;  // statement-specific evidence (JSON object)
    Method method = Method::exact;
    std::string tool_version;
    std::string created_at;  // RFC 3339; empty means omitted (reproducible mode)

    bool operator==(const Certificate&) const = default;
};

Certificate make_certificate(Statement st, std::map<std::string, std::string> parameters,
                             bool pass, nlohmann::json payload, Method method,
                             bool with_timestamp);

// Canonical serialization. The stream overload returns the bytes written.
std::string emit_certificate(const Certificate& cert);
size_t emit_certificate(const Certificate& cert, std::ostream& out);

// Inverse of emit_certificate; throws certificate_error on malformed input.
Certificate parse_certificate(std::string_view bytes);

// JSON forms of the report types, used in certificate payloads.
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const LemmaReport& r);

// Payload for a whole-range verification. include_timing controls whether
// elapsed time is embedded (it varies run to run, so reproducible output
// leaves it out).
nlohmann::json range_payload(const RangeCertificate& rc, bool include_timing);

// Current time as RFC 3339 UTC, second resolution.
std::string rfc3339_utc_now();

}  // namespace erdoslab
