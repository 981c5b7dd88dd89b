#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace phk {

/// One failed check. `indices` holds the basis indices that witness the
/// failure (a pair for a binary identity, a triple for an axiom sweep, ...).
struct Finding {
    std::string check;
    std::vector<std::size_t> indices;
    std::string detail;
};

/// Outcome of a verification sweep: every failing instance is recorded,
/// nothing is aborted early, and ok() means a clean pass.
struct Report {
    std::string subject;
    std::size_t checks_run = 0;
    std::vector<Finding> failures;

    bool ok() const { return failures.empty(); }

    void require(bool cond, const std::string& check,
                 std::vector<std::size_t> indices = {}, std::string detail = {}) {
        ++checks_run;
        if (!cond) failures.push_back({check, std::move(indices), std::move(detail)});
    }

    void note_failure(const std::string& check, std::vector<std::size_t> indices = {},
                      std::string detail = {}) {
        failures.push_back({check, std::move(indices), std::move(detail)});
    }

    void merge(const Report& o) {
        checks_run += o.checks_run;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }

    /// True when some failure has the given check name.
    bool failed(const std::string& check) const {
        for (const auto& f : failures)
            if (f.check == check) return true;
        return false;
    }

    std::string summary() const {
        if (ok()) return subject + ": ok (" + std::to_string(checks_run) + " checks)";
        std::string s = subject + ": " + std::to_string(failures.size()) + " failure(s)";
        for (const auto& f : failures) {
            s += "\n  " + f.check;
            if (!f.indices.empty()) {
                s += " at (";
                for (std::size_t i = 0; i < f.indices.size(); ++i)
                    s += (i ? "," : "") + std::to_string(f.indices[i]);
                s += ")";
            }
            if (!f.detail.empty()) s += ": " + f.detail;
        }
        return s;
    }
};

} // namespace phk
