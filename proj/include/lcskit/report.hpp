#pragma once

#include <string>
#include <vector>

namespace lcskit {

enum class CheckStatus { pass, fail, reported };

struct Check {
    std::string name;
    CheckStatus status;
    std::string witness; // canonical expression or short note

    bool passed() const { return status != CheckStatus::fail; }
};

/// Outcome of a verification run. `reported` entries surface measured
/// values and discrepancy findings without failing the run.
struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;

    void add(std::string name, CheckStatus status, std::string witness = "") {
        checks.push_back({std::move(name), status, std::move(witness)});
    }
    void add(std::string name, bool ok, std::string witness = "") {
        add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness));
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    int exit_status() const { return all_passed() ? 0 : 1; }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const;
};

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::reported: return "reported";
    }
    return "?";
}

} // namespace lcskit
