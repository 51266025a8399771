#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace wpl {

enum class Outcome { pass, fail, not_applicable };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
    }
    return "?";
}

/// One named check. A failing check always carries a nonempty witness.
struct CheckResult {
    std::string name;
    Outcome outcome = Outcome::not_applicable;
    std::string witness;

    static CheckResult pass(std::string name, std::string witness = {}) {
        return {std::move(name), Outcome::pass, std::move(witness)};
    }
    static CheckResult fail(std::string name, std::string witness) {
        if (witness.empty()) witness = "unspecified failure";
        return {std::move(name), Outcome::fail, std::move(witness)};
    }
    static CheckResult not_applicable(std::string name, std::string reason) {
        return {std::move(name), Outcome::not_applicable, std::move(reason)};
    }

    bool passed() const noexcept { return outcome == Outcome::pass; }
    bool failed() const noexcept { return outcome == Outcome::fail; }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    /// No check failed; not-applicable entries do not count against the report.
    bool passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace wpl
