// Acceptance suite: runs the full verification battery and reports one line
// per acceptance criterion. Exits nonzero if any criterion fails.
//
// Criterion 9 (twisting-system parameter search reaching the quadric-exact
// example) is expected to fail: the documented diagonal twisting data forces
// equal letter maps, which cannot produce the required sign pattern over the
// rationals. The companion check pins the Zhang-twist relationship that does
// hold. See the project README.

#include <iostream>
#include <map>
#include <vector>

#include "asreg/verify.hpp"

using namespace asreg;

int main() {
    VerificationReport rep = verify_paper();
    std::map<std::string, const CheckResult*> by_id;
    for (const auto& c : rep.checks) by_id[c.id] = &c;

    struct Criterion {
        std::string label;
        std::vector<std::string> checks;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: Hilbert coefficients (polynomial ring, catalog, quadric ring)",
         {"hilbert_poly4", "hilbert_catalog", "hilbert_sq"}},
        {"criterion 2: quadric-lift machinery (surjection, extraction, multiples)",
         {"omega_machinery", "omega_notnormal_error"}},
        {"criterion 3: normality (negative example, catalog lifts, adapted generators)",
         {"normality_deg2", "adapted_generators"}},
        {"criterion 4: point schemes (components, decoys, automorphism formulas)",
         {"pointscheme_plalg_b", "pointscheme_exact_quadric", "sigma_direction", "sigma_charts"}},
        {"criterion 5: relation-span stabilizer families", {"stabilizers"}},
        {"criterion 6: untwisting round trip and dimension invariance", {"prop25_roundtrip"}},
        {"criterion 7: normalizing maps proportional to declared automorphisms",
         {"phi_proportional"}},
        {"criterion 8: intersection multiplicities and slice classifications",
         {"multiplicity_quadric", "multiplicity_beta0", "multiplicity_reports"}},
        {"criterion 9: twisting-system parameter search", {"hv_search", "hv_zhang_regression"}},
        {"criterion 10: rewriting oracle and right-ideal chain",
         {"oracle_equivalence", "right_ideal_chain"}},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        bool ok = true;
        std::string detail;
        for (const auto& id : crit.checks) {
            auto it = by_id.find(id);
            if (it == by_id.end() || it->second->status == "fail") {
                ok = false;
                if (!detail.empty()) detail += "; ";
                detail += id + (it == by_id.end() ? " missing" : ": " + it->second->evidence);
            }
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << crit.label << "\n";
        if (!ok) {
            std::cout << "       " << detail << "\n";
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failing (see above)\n");
    return failures == 0 ? 0 : 1;
}
