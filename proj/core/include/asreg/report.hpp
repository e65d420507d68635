#pragma once

#include <string>
#include <vector>

namespace asreg {

struct CheckResult {
    std::string id;
    std::string status; // "pass" | "fail" | "abstain"
    std::string evidence;
    double millis = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_pass() const;
    size_t count(const std::string& status) const;
    std::string to_json() const; // UTF-8, stable key order
    std::string to_text() const; // one line per check
};

} // namespace asreg
