#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace ahlab {

using json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, refuted_instance, skipped };

std::string to_string(CheckStatus s);

// Outcome of one named check for one prime. A fail or refuted-instance
// always carries a witness describing the first violating instance.
struct CheckResult {
    std::string name;
    std::uint32_t prime = 0;
    json params = json::object();
    CheckStatus status = CheckStatus::pass;
    std::optional<json> witness;
    std::int64_t elapsed_ms = 0;

    bool ok() const {
        return status == CheckStatus::pass || status == CheckStatus::skipped;
    }

    static CheckResult pass(std::string name, std::uint32_t prime,
                            json params = json::object()) {
        return CheckResult{std::move(name), prime, std::move(params),
                           CheckStatus::pass, std::nullopt, 0};
    }
    static CheckResult fail(std::string name, std::uint32_t prime,
                            json witness, json params = json::object()) {
        return CheckResult{std::move(name), prime, std::move(params),
                           CheckStatus::fail, std::move(witness), 0};
    }
    static CheckResult refuted(std::string name, std::uint32_t prime,
                               json witness, json params = json::object()) {
        return CheckResult{std::move(name),         prime,
                           std::move(params),       CheckStatus::refuted_instance,
                           std::move(witness),      0};
    }
    static CheckResult skipped(std::string name, std::uint32_t prime,
                               std::string reason,
                               json params = json::object()) {
        CheckResult r{std::move(name), prime, std::move(params),
                      CheckStatus::skipped, std::nullopt, 0};
        r.params["reason"] = std::move(reason);
        return r;
    }
};

struct PrimeReport {
    std::uint32_t p = 0;
    std::vector<CheckResult> checks;
};

struct StatusTotals {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t refuted_instance = 0;
    std::int64_t skipped = 0;

    void add(CheckStatus s);
    friend bool operator==(const StatusTotals&, const StatusTotals&) = default;
};

struct VerificationReport {
    std::string schema_version = "1";
    json config_echo = json::object();
    std::vector<PrimeReport> primes; // sorted ascending by p
    StatusTotals totals;

    bool all_ok() const {
        return totals.fail == 0 && totals.refuted_instance == 0;
    }
};

json to_json(const CheckResult& c);
json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);
std::string report_to_csv(const VerificationReport& r);

} // namespace ahlab
