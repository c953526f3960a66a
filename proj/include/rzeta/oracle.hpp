#pragma once

#include "rzeta/complexmp.hpp"
#include "rzeta/digitset.hpp"
#include "rzeta/precision.hpp"

namespace rzeta {

// zeta(s), Re s > 1, via the Chebyshev-accelerated alternating series for
// eta(s) = (1 - 2^{1-s}) zeta(s) with exact integer acceleration
// coefficients. Deliberately disjoint from the moment series so that
// agreement between the two is evidence rather than tautology.
Cplx zeta_reference(const Cplx& s, int digits);

// Two-sided enclosure of a restricted sum (real exponent only).
struct SumBracket {
    Real lower;
    Real upper;
};

// lower = sum over admissible n < b^depth of n^-sigma; upper adds the
// geometric overcount of everything deeper (an admissible n with l digits
// is at least b^{l-1}, and there are at most N1 N^{l-1} of them).
SumBracket restricted_sum_bracket(const DigitSet& ds, const Real& sigma, int depth,
                                  const PrecisionContext& ctx);

struct ClosedFormDemo {
    double relative_error_closed_form;
    double relative_error_recurrence;
};

// Evaluates the full-alphabet moment u_m(s) in 53-bit arithmetic along both
// routes — Bernoulli closed form and recurrence — against a 100-digit
// reference, exposing the closed form's catastrophic cancellation.
ClosedFormDemo double_precision_closed_form_demo(int base, double s, int m);

}  // namespace rzeta
