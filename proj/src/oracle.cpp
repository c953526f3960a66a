#include "rzeta/oracle.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rzeta/bernoulli.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/moments.hpp"

namespace rzeta {

Cplx zeta_reference(const Cplx& s, int digits) {
    const double sigma = s.re().to_double();
    const double t_abs = std::abs(s.im().to_double());
    if (!(sigma > 1.0)) {
        throw DomainError("zeta_reference requires Re s > 1, got Re s = " +
                          std::to_string(sigma));
    }
    if (digits < 1) throw UsageError("digits must be >= 1");

    // Error after n terms is ~ (3+sqrt(8))^-n up to a e^{pi|t|/2} factor.
    constexpr double kLogAccel = 1.7627471740390861;  // ln(3+sqrt 8)
    const int n = static_cast<int>(
                      std::ceil((digits * 2.302585092994046 +
                                 1.5707963267948966 * t_abs + 5.0) /
                                kLogAccel)) +
                  4;

    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact rationals.
    std::vector<mpq_class> d(static_cast<std::size_t>(n) + 1);
    mpq_class term = 1;  // the i = 0 summand times n
    d[0] = term;
    for (int i = 1; i <= n; ++i) {
        term *= mpq_class(4L * (n + i - 1));
        term *= mpq_class(static_cast<long>(n - i + 1));
        term /= mpq_class(2L * i * (2L * i - 1));
        d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)] + term;
    }

    const long wb = Real::bits_for_digits(digits) + 64;
    const Cplx sw = at_precision(s, wb);
    Cplx sum(Real::from_long(0, wb), Real::from_long(0, wb));
    const mpq_class& d_n = d[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) {
        // Normalizing by d_n keeps every factor O(1).
        mpq_class ratio = (d[static_cast<std::size_t>(k)] - d_n) / d_n;
        Cplx term_k = npow_negs(static_cast<unsigned long>(k) + 1, sw, wb);
        term_k *= Real::from_mpq(ratio, wb);
        if (k % 2 == 0) sum += term_k; else sum -= term_k;
    }

    const Cplx one(Real::from_long(1, wb), Real::from_long(0, wb));
    const Cplx one_minus_s = one - sw;
    const Cplx denom = one - rpow(Real::from_long(2, wb), one_minus_s);
    return -(sum / denom);
}

SumBracket restricted_sum_bracket(const DigitSet& ds, const Real& sigma, int depth,
                                  const PrecisionContext& ctx) {
    const double sigma_d = sigma.to_double();
    const double abscissa = ds.is_full() ? 1.0 : ds.abscissa();
    if (!(sigma_d > abscissa)) {
        throw DomainError("sigma = " + std::to_string(sigma_d) +
                          " is not above the abscissa of convergence " +
                          std::to_string(abscissa));
    }
    if (depth < 1) throw UsageError("bracket depth must be >= 1");

    const long wb = ctx.working_bits();
    const Real sw = at_precision(sigma, wb);

    // Integer exponents take the cheap pow_ui route; the Kempner-style
    // brackets enumerate millions of terms at sigma = 1.
    long sigma_int = static_cast<long>(sigma_d);
    const bool integral = sigma_d == static_cast<double>(sigma_int) &&
                          sigma == Real::from_long(sigma_int, 64) && sigma_int >= 1 &&
                          sigma_int < 1000;

    Real lower = Real::from_long(0, wb);
    ds.for_each_below(depth + 1, [&](std::uint64_t m) {
        const Real n = Real::from_ulong(m, wb);
        if (integral) {
            lower += pow_ui(Real::from_long(1, wb) / n,
                            static_cast<unsigned long>(sigma_int));
        } else {
            lower += pow(n, -sw);
        }
    });

    // tail over levels l > depth: N1 sum r^{l-1} with r = N b^-sigma < 1.
    const Real ratio = Real::from_long(ds.count(), wb) /
                       pow(Real::from_long(ds.base(), wb), sw);
    Real tail = Real::from_long(ds.count_nonzero(), wb) *
                pow_ui(ratio, static_cast<unsigned long>(depth)) /
                (Real::from_long(1, wb) - ratio);

    // Symmetric slack absorbs accumulated rounding in either direction.
    const Real slack = (abs(lower) + Real::from_long(1, wb)) *
                       Real::from_double(1e-25, wb);
    SumBracket bracket{lower - slack, lower + tail + slack};
    return bracket;
}

namespace {

// 53-bit closed form for the full alphabet: the alternating Bernoulli sum
// whose cancellation this demo is designed to expose.
double closed_form_double(int b, double s, int m) {
    const double bs = std::pow(b, s);
    if (m == 0) return bs / (bs - b);
    double value = bs / ((m + 1) * (bs - b));
    const double bs1 = bs * b;
    value -= bs1 / (2.0 * (bs1 - b));
    BernoulliCache& cache = bernoulli_cache();
    double falling = 1.0;   // m!/(m-2k+1)!
    double fact2k = 1.0;    // (2k)!
    double bpow = bs;       // b^{s+2k}
    for (int k = 1; 2 * k <= m; ++k) {
        falling *= (m - 2 * k + 2);
        if (k > 1) falling *= (m - 2 * k + 3);
        fact2k *= (2 * k - 1) * (2 * k);
        bpow *= b * b;
        value += falling * cache.even(k).get_d() / fact2k * bpow / (bpow - b);
    }
    return value;
}

// 53-bit raw-moment recurrence for the full alphabet.
double recurrence_double(int b, double s, int m) {
    const double bs = std::pow(b, s);
    std::vector<double> u(static_cast<std::size_t>(m) + 1);
    u[0] = bs / (bs - b);
    std::vector<double> power_sums(static_cast<std::size_t>(m) + 1);
    for (int d = 0; d < b; ++d) {
        double p = 1.0;
        for (int j = 0; j <= m; ++j) {
            power_sums[static_cast<std::size_t>(j)] += p;
            p *= d;
        }
    }
    double bpow = 1.0;  // b^k
    for (int k = 1; k <= m; ++k) {
        bpow *= b;
        double binom = 1.0;
        double sum = 0.0;
        for (int j = 1; j <= k; ++j) {
            binom *= static_cast<double>(k - j + 1) / j;
            sum += binom * power_sums[static_cast<std::size_t>(j)] *
                   u[static_cast<std::size_t>(k - j)];
        }
        u[static_cast<std::size_t>(k)] = sum / (bpow * bs - b);
    }
    return u[static_cast<std::size_t>(m)];
}

double relative_error(double approx, const Real& truth) {
    const long wb = truth.prec();
    Real err = abs(Real::from_double(approx, wb) - truth) / abs(truth);
    return err.to_double();
}

}  // namespace

ClosedFormDemo double_precision_closed_form_demo(int base, double s, int m) {
    if (base < 2) throw UsageError("base must be >= 2");
    if (m < 0) throw UsageError("moment order must be >= 0");
    if (!(s > 1.0)) throw DomainError("the closed form needs Re s > 1");

    const PrecisionContext ctx(100);
    const DigitSet full = DigitSet::full(base);
    const Cplx sc(Real::from_double(s, ctx.working_bits()),
                  Real::from_long(0, ctx.working_bits()));
    const MomentTable table = build_moment_table(full, sc, m, ctx);
    const Real truth = table.u(m).re();

    ClosedFormDemo demo{};
    demo.relative_error_closed_form = relative_error(closed_form_double(base, s, m), truth);
    demo.relative_error_recurrence = relative_error(recurrence_double(base, s, m), truth);
    return demo;
}

}  // namespace rzeta
