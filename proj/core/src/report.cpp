#include "asreg/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace asreg {

bool VerificationReport::all_pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == "fail"; });
}

size_t VerificationReport::count(const std::string& status) const {
    return static_cast<size_t>(std::count_if(
        checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = c.status;
        e["evidence"] = c.evidence;
        e["ms"] = c.millis;
        j["checks"].push_back(std::move(e));
    }
    j["notes"] = notes;
    j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"abstain", count("abstain")}};
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << "[" << c.status << "] " << c.id << (c.evidence.empty() ? "" : " — " + c.evidence)
           << "\n";
    os << "summary: " << count("pass") << " pass, " << count("fail") << " fail, "
       << count("abstain") << " abstain\n";
    return os.str();
}

} // namespace asreg
