#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rzeta {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // measured quantities, tolerances, offending parameters
};

// The validation suite. Every tolerance is pinned inside the
// implementation; callers only learn pass/fail plus the measured margin.

// zeta(2) to 100 digits through the level-3 base-2 series, against pi^2/6.
CheckResult check_zeta_two_to_hundred_digits();
// Series vs the eta-acceleration reference over real and complex s.
CheckResult check_zeta_oracle_agreement();
// zeta(3) computed in bases 2, 3, 10 must coincide.
CheckResult check_base_invariance();
// One (b, s) evaluated at levels 2..5 must coincide.
CheckResult check_level_invariance();
// The no-9 harmonic sum: series value inside the enumeration bracket,
// and stable across levels.
CheckResult check_kempner_no_nine();
// The s = 1 display at b = 2 telescopes to log 2.
CheckResult check_log2_identity();
// b = 2, s = 1 makes the normalized moments exactly 1 (rational mode).
CheckResult check_constant_sequence();
// 1/(b^sigma - b) < u*_m(sigma) <= b^sigma/(b^sigma - b), full alphabet.
CheckResult check_bound_sandwich();
// |u_m(s)/u_0(s)| <= u_m(sigma)/u_0(sigma) over a random parameter grid.
CheckResult check_normalized_domination();
// Bernoulli closed form vs recurrence at high precision, plus the
// 53-bit cancellation demonstration.
CheckResult check_closed_form_agreement();
// Alternating partial sums enclose the limit at every truncation.
CheckResult check_real_bracketing();
// MGF: functional equation, Taylor coefficients vs moments, the
// multiplicative periodicity of F, and the zeroth Fourier coefficient.
CheckResult check_mgf_suite();
// Planned term count grows with |Im s| at fixed precision.
CheckResult check_term_growth();

struct CheckOptions {
    std::optional<double> sigma;  // extra single-point bound report
    std::optional<double> t;
};

// Family names accepted by run_check_family, in canonical order.
const std::vector<std::string>& check_families();

// Runs one named family; throws UsageError for unknown names.
std::vector<CheckResult> run_check_family(const std::string& family,
                                          const CheckOptions& options);

// Every family in canonical order (the default `check` grid).
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

}  // namespace rzeta
