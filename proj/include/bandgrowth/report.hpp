#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bandgrowth {

/// One verification check; a failure always carries a concrete witness.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }

    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    /// Line-oriented plain text: "<name> PASS" or "<name> FAIL <witness>".
    void write(std::ostream& os) const {
        for (const auto& c : checks) {
            os << c.name << (c.pass ? " PASS" : " FAIL");
            if (!c.pass && !c.witness.empty()) os << ' ' << c.witness;
            os << '\n';
        }
    }
};

} // namespace bandgrowth
