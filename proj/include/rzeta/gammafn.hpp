#pragma once

#include <complex>

#include "rzeta/complexmp.hpp"
#include "rzeta/real.hpp"

namespace rzeta {

// log|Gamma(z)| for Re z > 0, hardware doubles, Stirling series after
// shifting Re z up to 12. Good to ~1e-13 relative — planning quality.
double log_abs_gamma(std::complex<double> z);

// Upper estimate of Gamma(sigma+1)/|Gamma(s+1)| where sigma = Re s.
// This is the envelope for |(s+1)_m|/(sigma+1)_m over all m, used to
// budget term counts; result values never touch it. Saturates to
// +infinity when the ratio overflows a double (planning then falls
// back to stopping on observed term size).
double pochhammer_ratio_bound(double sigma, std::complex<double> s);

// Same quantity in log10, which never overflows; the series planner
// works in this space.
double log10_pochhammer_ratio(double sigma, std::complex<double> s);

// Full-precision Gamma. Real arguments go straight to MPFR; complex
// arguments (Re z > 0) use the Stirling series with enough recurrence
// shifts for the target precision. Exercised by the Fourier-coefficient
// path, where Gamma(s - 2 pi i k / log b) multiplies the result.
Real gamma_real(const Real& x);
Cplx log_gamma(const Cplx& z, long bits);
Cplx gamma(const Cplx& z, long bits);

}  // namespace rzeta
