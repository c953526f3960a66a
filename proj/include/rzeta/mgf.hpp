#pragma once

#include <vector>

#include "rzeta/complexmp.hpp"
#include "rzeta/digitset.hpp"
#include "rzeta/precision.hpp"

namespace rzeta {

// alpha_A(t) = sum_{a in A} e^{at}. The full alphabet admits the
// geometric closed form (e^{bt} - 1)/(e^t - 1), used away from the
// zeros of e^t - 1; near them (including the removable point t = 0,
// where the value is b) the digit-by-digit sum is used instead.
Cplx alpha(const DigitSet& ds, const Cplx& t);

struct MgfEvaluation {
    Cplx t;
    int depth = 0;  // j-product truncation J
    Cplx value;
};

// E_{A,s}(t) = 1 + sum_{j>=1} b^{-js} prod_{i=1..j} alpha_A(b^{-i}t),
// truncated once the geometric tail (ratio N/b^sigma, prefactor
// e^{max(0,Re t)}) drops under 10^-target. A nonnegative
// `depth_override` forces the truncation depth instead.
MgfEvaluation evaluate_E(const DigitSet& ds, const Cplx& s, const Cplx& t,
                         const PrecisionContext& ctx, int depth_override = -1);

struct LimitFunctionEvaluation {
    Cplx t;
    int positive_depth = 0;  // last positive j included
    Cplx value;
};

// F_{A,s}(t) = t^s e^{-lambda t} phi_B(q) E_{A,s}(t)
//            + sum_{j>=1} (b^j t)^s e^{-lambda b^j t} phi_B(q^{b^j}),
// q = e^{-t}, B = {f - a : a in A}, phi_B the generating series of the
// B-admissible integers. Invariant under t -> bt; Re t > 0 required.
LimitFunctionEvaluation evaluate_F(const DigitSet& ds, const Cplx& s, const Cplx& t,
                                   const PrecisionContext& ctx);

// k-th Fourier coefficient of F as a 1-periodic function of log_b t:
//   Gamma(z)/log b * sum_{n B-admissible} (n + lambda)^{-z},
// z = s - 2 pi i k / log b. The admissible sum is enumerated level by
// level with a geometric tail bound; precision beyond ~10 digits gets
// expensive when b^sigma/N is close to 1 (validation path only).
Cplx fourier_coefficient(const DigitSet& ds, const Cplx& s, int k, const PrecisionContext& ctx);

// integral_0^1 F(b^u) e^{-2 pi i k u} du by composite Gauss-Legendre
// panels, doubled until two successive estimates agree to 10^-target.
Cplx fourier_by_quadrature(const DigitSet& ds, const Cplx& s, int k,
                           const PrecisionContext& ctx);

// Taylor route to the moments: u_m(s) = m! [t^m] E_{A,s}(t) computed
// by expanding the truncated alpha-product — independent of the
// moment recurrence, so agreement is evidence.
std::vector<Cplx> mgf_taylor_moments(const DigitSet& ds, const Cplx& s, int M,
                                     const PrecisionContext& ctx);

}  // namespace rzeta
