#include "ahlab/check.hpp"

#include <sstream>

namespace ahlab {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::refuted_instance: return "refuted-instance";
    case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "refuted-instance") return CheckStatus::refuted_instance;
    if (s == "skipped") return CheckStatus::skipped;
    throw std::invalid_argument("unknown check status: " + s);
}

} // namespace

void StatusTotals::add(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: ++pass; break;
    case CheckStatus::fail: ++fail; break;
    case CheckStatus::refuted_instance: ++refuted_instance; break;
    case CheckStatus::skipped: ++skipped; break;
    }
}

json to_json(const CheckResult& c) {
    json j{{"name", c.name},
           {"params", c.params},
           {"status", to_string(c.status)},
           {"elapsed_ms", c.elapsed_ms}};
    if (c.witness) j["witness"] = *c.witness;
    return j;
}

json to_json(const VerificationReport& r) {
    json primes = json::array();
    for (const auto& pr : r.primes) {
        json checks = json::array();
        for (const auto& c : pr.checks) checks.push_back(to_json(c));
        primes.push_back(json{{"p", pr.p}, {"checks", std::move(checks)}});
    }
    return json{{"schema_version", r.schema_version},
                {"config_echo", r.config_echo},
                {"primes", std::move(primes)},
                {"totals",
                 json{{"pass", r.totals.pass},
                      {"fail", r.totals.fail},
                      {"refuted_instance", r.totals.refuted_instance},
                      {"skipped", r.totals.skipped}}}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.config_echo = j.at("config_echo");
    for (const auto& pj : j.at("primes")) {
        PrimeReport pr;
        pr.p = pj.at("p").get<std::uint32_t>();
        for (const auto& cj : pj.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            c.prime = pr.p;
            c.params = cj.at("params");
            c.status = status_from_string(cj.at("status").get<std::string>());
            if (cj.contains("witness")) c.witness = cj.at("witness");
            c.elapsed_ms = cj.at("elapsed_ms").get<std::int64_t>();
            pr.checks.push_back(std::move(c));
        }
        r.primes.push_back(std::move(pr));
    }
    const auto& t = j.at("totals");
    r.totals.pass = t.at("pass").get<std::int64_t>();
    r.totals.fail = t.at("fail").get<std::int64_t>();
    r.totals.refuted_instance = t.at("refuted_instance").get<std::int64_t>();
    r.totals.skipped = t.at("skipped").get<std::int64_t>();
    return r;
}

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "p,name,status,elapsed_ms,witness\n";
    for (const auto& pr : r.primes)
        for (const auto& c : pr.checks) {
            std::string witness = c.witness ? c.witness->dump() : "";
            // RFC 4180 quoting for the JSON witness column.
            std::string quoted = "\"";
            for (char ch : witness) {
                if (ch == '"') quoted += '"';
                quoted += ch;
            }
            quoted += '"';
            out << pr.p << ',' << c.name << ',' << to_string(c.status) << ','
                << c.elapsed_ms << ',' << (c.witness ? quoted : "\"\"") << '\n';
        }
    return out.str();
}

} // namespace ahlab
