#include "erdoslab/certificate.hpp"

#include <ctime>
#include <ostream>

#include "erdoslab/version.hpp"

namespace erdoslab {

using nlohmann::json;

namespace {

// nlohmann orders object keys lexicographically and dump() emits no
// insignificant whitespace, which together give the canonical form.
json certificate_json(const Certificate& c) {
    json j = json::object();
    j["schema_version"] = c.schema_version;
    j["statement"] = std::string(to_string(c.statement));
    j["parameters"] = c.parameters;
    j["result"] = json{{"pass", c.pass}, {"payload", c.payload}};
    j["method"] = std::string(to_string(c.method));
    j["tool_version"] = c.tool_version;
    if (!c.created_at.empty()) j["created_at"] = c.created_at;
    return j;
}

[[noreturn]] void bad(const std::string& what) {
    throw certificate_error("certificate: " + what);
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Certificate make_certificate(Statement st, std::map<std::string, std::string> parameters,
                             bool pass, json payload, Method method, bool with_timestamp) {
    Certificate c;
    c.schema_version = kSchemaVersion;
    c.statement = st;
    c.parameters = std::move(parameters);
    c.pass = pass;
    c.payload = std::move(payload);
    c.method = method;
    c.tool_version = kToolVersion;
    if (with_timestamp) c.created_at = rfc3339_utc_now();
    return c;
}

std::string emit_certificate(const Certificate& cert) {
    return certificate_json(cert).dump();
}

size_t emit_certificate(const Certificate& cert, std::ostream& out) {
    const std::string bytes = emit_certificate(cert);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return bytes.size();
}

Certificate parse_certificate(std::string_view bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) bad("input is not valid JSON");
    if (!j.is_object()) bad("top level must be an object");

    Certificate c;
    c.schema_version = string_field(j, "schema_version");
    if (c.schema_version != kSchemaVersion)
        bad("unsupported schema_version '" + c.schema_version + "'");

    if (!statement_from_string(string_field(j, "statement"), c.statement))
        bad("unknown statement '" + string_field(j, "statement") + "'");
    if (!method_from_string(string_field(j, "method"), c.method))
        bad("unknown method '" + string_field(j, "method") + "'");

    const json& params = field(j, "parameters");
    if (!params.is_object()) bad("'parameters' must be an object");
    for (const auto& [k, v] : params.items()) {
        if (!v.is_string()) bad("parameter '" + k + "' must be a string");
        c.parameters[k] = v.get<std::string>();
    }

    const json& result = field(j, "result");
    if (!result.is_object()) bad("'result' must be an object");
    const json& pass = field(result, "pass");
    if (!pass.is_boolean()) bad("'result.pass' must be a boolean");
    c.pass = pass.get<bool>();
    c.payload = field(result, "payload");

    c.tool_version = string_field(j, "tool_version");
    if (j.contains("created_at")) c.created_at = string_field(j, "created_at");
    return c;
}

json to_json(const Witness& w) {
    json j = json::object();
    j["p"] = std::to_string(w.p);
    j["values"] = w.values;
    return j;
}

json to_json(const LemmaReport& r) {
    json j = json::object();
    j["statement"] = std::string(to_string(r.statement));
    j["n"] = std::to_string(r.n);
    j["status"] = std::string(to_string(r.status));
    j["method"] = std::string(to_string(r.method));
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

json range_payload(const RangeCertificate& rc, bool include_timing) {
    json j = json::object();
    j["n_lo"] = std::to_string(rc.n_lo);
    j["n_hi"] = std::to_string(rc.n_hi);
    j["all_pass"] = rc.all_pass;
    json list = json::array();
    for (const auto& r : rc.anomalies) list.push_back(to_json(r));
    j["anomalies"] = std::move(list);
    if (include_timing) j["elapsed_us"] = std::to_string(rc.elapsed.count());
    return j;
}

std::string rfc3339_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace erdoslab
