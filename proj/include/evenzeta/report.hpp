#pragma once

#include <string>
#include <vector>

namespace evenzeta {

/// Result of an identity-verification suite: per-check lines plus totals.
struct VerifyReport {
    std::string suite;
    bool ok = true;
    unsigned checked = 0;
    unsigned failed = 0;
    std::vector<std::string> lines;

    explicit VerifyReport(std::string name) : suite(std::move(name)) {}

    void add(bool passed, const std::string& line) {
        ++checked;
        if (!passed) {
            ++failed;
            ok = false;
        }
        lines.push_back((passed ? "ok   " : "FAIL ") + line);
    }

    void note(const std::string& line) { lines.push_back("     " + line); }

    void merge(const VerifyReport& other) {
        checked += other.checked;
        failed += other.failed;
        ok = ok && other.ok;
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }

    std::string summary() const {
        return suite + ": " + (ok ? "PASS" : "FAIL") + " (" + std::to_string(checked) +
               " checks, " + std::to_string(failed) + " failures)";
    }

    std::string to_string() const {
        std::string out = summary();
        for (const auto& l : lines) {
            out += "\n  ";
            out += l;
        }
        return out;
    }
};

}  // namespace evenzeta
