#include "rzeta/moments.hpp"

#include <cmath>

#include "rzeta/errors.hpp"
#include "rzeta/gammafn.hpp"

namespace rzeta {

namespace {

void require_convergent(const DigitSet& ds, double sigma) {
    double abscissa = ds.is_full() ? 1.0 : ds.abscissa();
    if (!(sigma > abscissa)) {
        throw DomainError("Re s = " + std::to_string(sigma) +
                          " is not above the abscissa of convergence log_" +
                          std::to_string(ds.base()) + "(" + std::to_string(ds.count()) +
                          ") = " + std::to_string(abscissa));
    }
}

// log10 of b^sigma / |b^s - N|, safe for any sigma (works in log space
// once b^sigma leaves double range). The denominator is replaced by a
// certified lower estimate, so the quotient stays an upper bound even
// when the double-precision phase of b^{it} has rounded badly.
double log10_mass_factor(int b, int N, std::complex<double> s) {
    double sigma = s.real();
    double log10_b = std::log10(static_cast<double>(b));
    double floor_denom = std::pow(static_cast<double>(b), sigma) - N;  // |b^s - N| >= b^sigma - N
    if (sigma * std::log2(static_cast<double>(b)) < 500.0) {
        std::complex<double> bs = std::exp(s * std::log(static_cast<double>(b)));
        double computed = std::abs(bs - static_cast<double>(N));
        double phase_margin = std::abs(bs) * 1e-9 * (1.0 + std::abs(s.imag()) * 1e-4);
        double denom = std::max({floor_denom, computed - phase_margin, 1e-300});
        return sigma * log10_b - std::log10(denom);
    }
    // b^sigma overflows a double but then N b^{-sigma} < 1e-100 and the
    // ratio is 1 up to that relative error.
    return 1e-15;
}

}  // namespace

MomentTable build_moment_table(const DigitSet& ds, const Cplx& s, int M,
                               const PrecisionContext& ctx) {
    if (M < 0) throw UsageError("moment index must be >= 0");
    const long wb = ctx.working_bits();
    require_convergent(ds, s.re().to_double());

    const int b = ds.base();
    const long N = ds.count();
    Cplx sw(Real::from_long(0, wb) + s.re(), Real::from_long(0, wb) + s.im());
    const Real n_real = Real::from_long(N, wb);
    const Cplx bs = rpow(Real::from_long(b, wb), sw);
    const Cplx mass = bs / Cplx(bs.re() - n_real, bs.im());

    const std::vector<mpz_class> sums = ds.power_sums(M);
    std::vector<Real> sums_r;
    sums_r.reserve(sums.size());
    for (const mpz_class& z : sums) sums_r.push_back(Real::from_mpz(z, wb));

    MomentTable table{ds, sw, mass, {}, {}};
    table.normalized.reserve(static_cast<std::size_t>(M) + 1);
    table.poch.reserve(static_cast<std::size_t>(M) + 1);
    const Cplx one(Real::from_long(1, wb), Real::from_long(0, wb));
    table.normalized.push_back(one);
    table.poch.push_back(one);

    Real bpow = Real::from_long(1, wb);  // b^m
    for (int m = 1; m <= M; ++m) {
        bpow *= b;
        // w_j = (s+m)(s+m-1)...(s+m-j+1)/j!, updated one factor at a time.
        Cplx w = one;
        Cplx acc(Real::from_long(0, wb), Real::from_long(0, wb));
        for (int j = 1; j <= m; ++j) {
            w *= Cplx(sw.re() + Real::from_long(m - j + 1, wb), sw.im());
            w /= Real::from_long(j, wb);
            acc += w * sums_r[static_cast<std::size_t>(j)] *
                   table.normalized[static_cast<std::size_t>(m - j)];
        }
        Cplx denom(bs.re() * bpow - n_real, bs.im() * bpow);
        table.normalized.push_back(acc / denom);
        // (s+1)_m/m! gains the factor (s+m)/m.
        Cplx p = table.poch.back();
        p *= Cplx(sw.re() + Real::from_long(m, wb), sw.im());
        p /= Real::from_long(m, wb);
        table.poch.push_back(p);
    }
    return table;
}

Cplx moment_closed_form(int b, const Cplx& s, int m, BernoulliCache& cache,
                        const PrecisionContext& ctx) {
    if (m < 0) throw UsageError("moment index must be >= 0");
    if (!(s.re().to_double() > 1.0)) {
        throw DomainError("closed form needs Re s > 1 (full digit set)");
    }
    const long wb = ctx.working_bits();
    Cplx sw(Real::from_long(0, wb) + s.re(), Real::from_long(0, wb) + s.im());
    const Real br = Real::from_long(b, wb);
    const Cplx bs = rpow(br, sw);
    auto pole_term = [&](const Cplx& bpow_s) {
        // bpow_s / (bpow_s - b)
        return bpow_s / Cplx(bpow_s.re() - br, bpow_s.im());
    };
    if (m == 0) return pole_term(bs);

    Cplx total = pole_term(bs) / Real::from_long(m + 1, wb);
    Cplx bs1 = bs * br;
    total -= pole_term(bs1) / Real::from_long(2, wb);

    mpz_class falling = 1;   // m!/(m-2k+1)! = m(m-1)...(m-2k+2)
    mpz_class factorial = 1; // (2k)!
    Cplx bs2k = bs;
    const Real b2 = br * br;
    for (int k = 1; 2 * k <= m; ++k) {
        // m!/(m-2k+1)! picks up factors (m-2k+3)(m-2k+2) going k-1 -> k
        // (just m at k=1); (2k)! picks up (2k-1)(2k).
        falling *= static_cast<unsigned long>(m - 2 * k + 2);
        if (k > 1) falling *= static_cast<unsigned long>(m - 2 * k + 3);
        factorial *= static_cast<unsigned long>(2 * k - 1);
        factorial *= static_cast<unsigned long>(2 * k);
        mpq_class coeff = mpq_class(falling) * cache.even(k) / mpq_class(factorial);
        coeff.canonicalize();
        bs2k *= b2;
        total += pole_term(bs2k) * Real::from_mpq(coeff, wb);
    }
    return total;
}

double closed_form_cancellation_ratio(int b, const Cplx& s, int m, BernoulliCache& cache,
                                      const PrecisionContext& ctx) {
    const long wb = ctx.working_bits();
    Cplx sw(Real::from_long(0, wb) + s.re(), Real::from_long(0, wb) + s.im());
    const Real br = Real::from_long(b, wb);
    const Cplx bs = rpow(br, sw);
    auto pole_term = [&](const Cplx& bpow_s) {
        return bpow_s / Cplx(bpow_s.re() - br, bpow_s.im());
    };
    if (m < 2) return 1.0;

    Real max_mag = Real::from_long(0, wb);
    auto observe = [&](const Cplx& term) {
        Real a = abs(term);
        if (a > max_mag) max_mag = a;
    };
    Cplx term = pole_term(bs) / Real::from_long(m + 1, wb);
    Cplx total = term;
    observe(term);
    Cplx bs1 = bs * br;
    term = -(pole_term(bs1) / Real::from_long(2, wb));
    total += term;
    observe(term);

    mpz_class falling = 1;
    mpz_class factorial = 1;
    Cplx bs2k = bs;
    const Real b2 = br * br;
    for (int k = 1; 2 * k <= m; ++k) {
        falling *= static_cast<unsigned long>(m - 2 * k + 2);
        factorial *= static_cast<unsigned long>(2 * k - 1);
        factorial *= static_cast<unsigned long>(2 * k);
        if (k > 1) falling *= static_cast<unsigned long>(m - 2 * k + 3);
        mpq_class coeff = mpq_class(falling) * cache.even(k) / mpq_class(factorial);
        coeff.canonicalize();
        bs2k *= b2;
        term = pole_term(bs2k) * Real::from_mpq(coeff, wb);
        total += term;
        observe(term);
    }
    return (max_mag / abs(total)).to_double();
}

double log10_bound_u_star(const DigitSet& ds, std::complex<double> s, int m) {
    const double sigma = s.real();
    require_convergent(ds, sigma);
    const int b = ds.base();
    const int N = ds.count();

    double total = m * std::log10(ds.lambda_double()) + log10_mass_factor(b, N, s);

    if (s.imag() != 0.0) {
        if (sigma >= 1.0) {
            // direct |(s+1)_m|/(sigma+1)_m versus its Gamma-ratio envelope
            double direct = 0.0;
            for (int j = 1; j <= m; ++j) {
                double re = sigma + j;
                direct += 0.5 * std::log10(re * re + s.imag() * s.imag()) - std::log10(re);
            }
            total += std::min(direct, log10_pochhammer_ratio(sigma, s));
        } else {
            // |(s+1)_m|/m!
            for (int j = 1; j <= m; ++j) {
                double re = sigma + j;
                total += 0.5 * std::log10(re * re + s.imag() * s.imag()) -
                         std::log10(static_cast<double>(j));
            }
        }
    } else if (sigma < 1.0) {
        // (sigma+1)_m/m!
        total += std::lgamma(sigma + 1.0 + m) - std::lgamma(sigma + 1.0) -
                 std::lgamma(static_cast<double>(m) + 1.0);
    }
    // absorb double roundoff so the bound stays a bound
    return total + 1e-9;
}

Real bound_u_star(const DigitSet& ds, const Cplx& s, int m, long bits) {
    std::complex<double> sd(s.re().to_double(), s.im().to_double());
    return Real::exp10_of(log10_bound_u_star(ds, sd, m) + 1e-12, bits);
}

Real lower_bound_u_star(const DigitSet& ds, const Real& sigma, int m, long bits) {
    require_convergent(ds, sigma.to_double());
    const long wb = bits + 64;
    Real sw = Real::from_long(0, wb) + sigma;
    Real num = pow_ui(ds.lambda(wb), static_cast<unsigned long>(m));
    Real den = pow(Real::from_long(ds.base(), wb), sw) - Real::from_long(ds.count(), wb);
    return (num / den) * (Real::from_long(1, wb) - Real::exp10_of(-15, wb));
}

std::vector<mpq_class> rational_normalized_moments(const DigitSet& ds, long s, int M) {
    if (M < 0) throw UsageError("moment index must be >= 0");
    const std::vector<mpz_class> sums = ds.power_sums(M);
    std::vector<mpq_class> c;
    c.reserve(static_cast<std::size_t>(M) + 1);
    c.emplace_back(1);
    for (int m = 1; m <= M; ++m) {
        mpq_class acc(0);
        mpq_class w(1);
        for (int j = 1; j <= m; ++j) {
            w *= mpq_class(s + m - j + 1, j);
            w.canonicalize();
            acc += w * mpq_class(sums[static_cast<std::size_t>(j)]) *
                   c[static_cast<std::size_t>(m - j)];
        }
        if (s + m < 0) throw DomainError("b^{m+s} requires m+s >= 0 in exact mode");
        mpz_class bpow;
        mpz_ui_pow_ui(bpow.get_mpz_t(), static_cast<unsigned long>(ds.base()),
                      static_cast<unsigned long>(s + m));
        mpq_class denom = mpq_class(bpow) - mpq_class(ds.count());
        if (denom == 0) throw DomainError("recurrence pole b^{m+s} = N");
        acc /= denom;
        acc.canonicalize();
        c.push_back(acc);
    }
    return c;
}

}  // namespace rzeta
