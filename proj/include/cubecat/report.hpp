#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace cubecat {

// One verified identity: pass/fail, how many tuples were swept, and the
// first counterexample (as text) when the check failed.
struct CheckResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    std::string witness;
};

struct Report {
    std::string suite;
    std::string site;
    int max_degree = 0;
    std::vector<CheckResult> results;

    void add(std::string name, bool passed, long long checks, std::string witness = "") {
        results.push_back({std::move(name), passed, checks, std::move(witness)});
    }

    bool passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }

    long long total_checks() const {
        long long n = 0;
        for (const auto& r : results) n += r.checks;
        return n;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "suite: " << suite << " (site=" << site << ", max-degree=" << max_degree << ")\n";
        for (const auto& r : results) {
            out << "  [" << (r.passed ? "PASS" : "FAIL") << "] " << r.name << " (" << r.checks
                << " checks)";
            if (!r.passed && !r.witness.empty()) out << "\n         witness: " << r.witness;
            out << "\n";
        }
        out << "overall: " << (passed() ? "PASS" : "FAIL") << " (" << total_checks()
            << " checks)\n";
        return out.str();
    }
};

} // namespace cubecat
