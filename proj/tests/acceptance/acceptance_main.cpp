// Acceptance gate for the whole project: runs every criterion of the
// validation plan and prints one PASS/FAIL line each. Tolerances are
// pinned inside the check implementations; a nonzero exit means at
// least one criterion did not hold.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "rzeta/checks.hpp"

int main() {
    using rzeta::CheckResult;
    struct Criterion {
        const char* id;
        std::function<CheckResult()> run;
    };
    const std::vector<Criterion> criteria = {
        {"A01-zeta2-100-digits", rzeta::check_zeta_two_to_hundred_digits},
        {"A02-oracle-agreement", rzeta::check_zeta_oracle_agreement},
        {"A03-base-invariance", rzeta::check_base_invariance},
        {"A04-level-invariance", rzeta::check_level_invariance},
        {"A05-no-nine-kempner", rzeta::check_kempner_no_nine},
        {"A06-log2-identity", rzeta::check_log2_identity},
        {"A07-constant-sequence", rzeta::check_constant_sequence},
        {"A08-bound-sandwich", rzeta::check_bound_sandwich},
        {"A09-domination", rzeta::check_normalized_domination},
        {"A10-closed-form", rzeta::check_closed_form_agreement},
        {"A11-real-bracketing", rzeta::check_real_bracketing},
        {"A12-mgf-suite", rzeta::check_mgf_suite},
        {"A13-term-growth", rzeta::check_term_growth},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        CheckResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("unexpected exception: ") + e.what();
        }
        std::printf("[%s] %-20s %s\n", result.passed ? "PASS" : "FAIL", criterion.id,
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.passed) ++failures;
    }
    if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
