#pragma once

#include <complex>
#include <vector>

#include "rzeta/bernoulli.hpp"
#include "rzeta/complexmp.hpp"
#include "rzeta/digitset.hpp"
#include "rzeta/precision.hpp"

namespace rzeta {

// Coefficient table for the moment series at fixed (b, A, s).
//
// The stored sequence is the normalized one, c_m = u*_m / u*_0: it
// satisfies the same recurrence as u*_m but starts at exactly 1, keeps
// the pole of the mass u*_0 = b^s/(b^s - N) out of the recurrence, and
// at b=2, s=1 realizes the constant sequence c_m = 1. The raw moments
// u_m = u*_m m!/(s+1)_m are recovered through the cached Pochhammer
// factors; unlike u*_m they are dominated by their real-axis values
// and are periodic in s with period 2*pi*i/log b.
struct MomentTable {
    DigitSet ds;
    Cplx s;
    Cplx mass;                     // u*_0 = b^s/(b^s - N)
    std::vector<Cplx> normalized;  // c_m = u*_m/u*_0; c_0 = 1 exactly
    std::vector<Cplx> poch;        // (s+1)_m / m!

    int max_index() const { return static_cast<int>(normalized.size()) - 1; }
    const Cplx& c(int m) const { return normalized[static_cast<std::size_t>(m)]; }
    Cplx u_star(int m) const { return mass * c(m); }
    // u_m / u_0, the quantity Prop-2.7 style domination applies to.
    Cplx raw_normalized(int m) const { return c(m) / poch[static_cast<std::size_t>(m)]; }
    Cplx u(int m) const { return mass * raw_normalized(m); }
};

// Runs the starred recurrence (b^{m+s} - N) c_m =
//   sum_{j=1..m} [(s+m)(s+m-1)...(s+m-j+1)/j!] S_j c_{m-j}
// up to index M at ctx working precision. Cost is quadratic in M; the
// recurrence is inherently sequential in m.
MomentTable build_moment_table(const DigitSet& ds, const Cplx& s, int M,
                               const PrecisionContext& ctx);

// Bernoulli closed form for the full digit set:
//   u_m(s) = b^s/((m+1)(b^s - b)) - b^{s+1}/(2(b^{s+1} - b))
//          + sum_{1<=k<=m/2} [m!/(m-2k+1)!] [B_{2k}/(2k)!] b^{s+2k}/(b^{s+2k} - b).
// Summands grow with m while the value shrinks, so this cancels badly;
// it exists as a cross-check target, not a computation path.
Cplx moment_closed_form(int b, const Cplx& s, int m, BernoulliCache& cache,
                        const PrecisionContext& ctx);

// Largest |summand| / |result| encountered in the closed form — the
// cancellation the recurrence path avoids.
double closed_form_cancellation_ratio(int b, const Cplx& s, int m, BernoulliCache& cache,
                                      const PrecisionContext& ctx);

// log10 of an upper bound for |u*_m(s)|:
//   |u*_m(s)| <= P_m * lambda^m * b^sigma / |b^s - N|
// with P_m = min(|(s+1)_m|/(sigma+1)_m, Gamma(sigma+1)/|Gamma(s+1)|)
// for sigma >= 1 and P_m = |(s+1)_m|/m! for sigma < 1 (where the
// lambda^m moment estimate only holds in the weaker sup-norm form).
// Computed in doubles — cheap enough to call inside planning loops —
// and inflated so the result stays a true bound.
double log10_bound_u_star(const DigitSet& ds, std::complex<double> s, int m);

// Same bound materialized at `bits` precision for error reporting.
Real bound_u_star(const DigitSet& ds, const Cplx& s, int m, long bits);

// lambda^m / (b^sigma - N), a strict lower bound for u*_m(sigma)
// (real parameters only); deflated so the result stays strictly below.
Real lower_bound_u_star(const DigitSet& ds, const Real& sigma, int m, long bits);

// The normalized recurrence over exact rationals at integer s. Needs
// no convergence assumption (the mass never enters); b^{m+s} != N is
// required, which holds for every s >= 1. At b=2, s=1 the output is
// the all-ones sequence.
std::vector<mpq_class> rational_normalized_moments(const DigitSet& ds, long s, int M);

}  // namespace rzeta
