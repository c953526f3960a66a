#include "rzeta/mgf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rzeta/errors.hpp"
#include "rzeta/gammafn.hpp"

namespace rzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kLog10E = 0.4342944819032518;

void check_abscissa(const DigitSet& ds, double sigma) {
    double abscissa = ds.is_full() ? 1.0 : ds.abscissa();
    if (!(sigma > abscissa)) {
        throw DomainError("Re s = " + std::to_string(sigma) +
                          " is not above the abscissa of convergence log_" +
                          std::to_string(ds.base()) + "(" + std::to_string(ds.count()) +
                          ") = " + std::to_string(abscissa));
    }
}

// Digit set of the mirrored alphabet B = { f - a : a in A }, f = max A.
DigitSet mirror_set(const DigitSet& ds) {
    const int f = ds.max_digit();
    std::vector<int> mirrored;
    mirrored.reserve(ds.digits().size());
    for (int a : ds.digits()) mirrored.push_back(f - a);
    std::sort(mirrored.begin(), mirrored.end());
    return DigitSet::from_digits(ds.base(), std::move(mirrored));
}

// log10(N / b^sigma), the level-to-level decay rate of admissible sums.
double log10_level_ratio(const DigitSet& ds, double sigma) {
    return std::log10(static_cast<double>(ds.count())) -
           sigma * std::log10(static_cast<double>(ds.base()));
}

// phi_B(e^{-t}) = sum over B-admissible n >= 0 of e^{-nt}, truncated where
// e^{-n Re t} drops under 10^-(digits+3); the n = 0 term is always 1.
Cplx phi_series(const DigitSet& bset, const Cplx& t, double t_re, int digits, long wb) {
    Cplx acc(Real::from_long(1, wb), Real::from_long(0, wb));
    if (bset.count_nonzero() == 0) return acc;  // B = {0}: only n = 0
    const double nmax = (digits + 3) * kLn10 / t_re;
    if (nmax < 1.0) return acc;
    if (nmax > 5e7) {
        throw UnsupportedError(
            "limit-function series needs ~" + std::to_string(static_cast<long long>(nmax)) +
            " terms at Re t = " + std::to_string(t_re) + "; increase Re t or lower the target");
    }
    int levels = 1;
    double top = bset.base();
    while (top <= nmax) {
        top *= bset.base();
        ++levels;
    }
    for (int l = 1; l <= levels; ++l) {
        bset.for_each_in_block(l, [&](std::uint64_t n) {
            if (static_cast<double>(n) > nmax) return;
            acc += cexp(-(t * Real::from_ulong(n, wb)));
        });
    }
    return acc;
}

}  // namespace

Cplx alpha(const DigitSet& ds, const Cplx& t) {
    const long wb = t.prec();
    if (ds.is_full()) {
        const Cplx et = cexp(t);
        const Cplx em1(et.re() - Real::from_long(1, wb), et.im());
        // The closed form divides by e^t - 1; keep it away from the zeros.
        if (!em1.is_zero() && log10_approx(abs(em1)) > -1.0) {
            const Cplx ebt = cexp(t * Real::from_long(ds.base(), wb));
            const Cplx ebm1(ebt.re() - Real::from_long(1, wb), ebt.im());
            return ebm1 / em1;
        }
    }
    const Cplx q = cexp(t);
    Cplx power(Real::from_long(1, wb), Real::from_long(0, wb));
    Cplx acc(Real::from_long(0, wb), Real::from_long(0, wb));
    int reached = 0;
    for (int d : ds.digits()) {
        for (; reached < d; ++reached) power *= q;
        acc += power;
    }
    return acc;
}

MgfEvaluation evaluate_E(const DigitSet& ds, const Cplx& s, const Cplx& t,
                         const PrecisionContext& ctx, int depth_override) {
    const double sigma = s.re().to_double();
    check_abscissa(ds, sigma);
    const long wb = ctx.working_bits();
    const Cplx sw = at_precision(s, wb);
    const Cplx tw = at_precision(t, wb);

    int depth;
    if (depth_override >= 0) {
        depth = depth_override;
    } else {
        // |b^{-js} prod_i alpha(b^{-i} t)| <= rho^j e^{max(0, Re t)} with
        // rho = N/b^sigma, so the tail past J is rho^{J+1}/(1-rho) times the
        // exponential prefactor.
        const double rho_log10 = log10_level_ratio(ds, sigma);
        const double rho = std::pow(10.0, rho_log10);
        const double prefactor = std::max(0.0, t.re().to_double()) * kLog10E -
                                 std::log10(1.0 - rho);
        depth = static_cast<int>(
                    std::ceil((ctx.target_digits + 2 + prefactor) / -rho_log10)) +
                1;
        depth = std::max(depth, 1);
    }

    const Real binv = Real::from_long(1, wb) / Real::from_long(ds.base(), wb);
    const Cplx bs_inv = cinv(rpow(Real::from_long(ds.base(), wb), sw));
    Cplx scaled_t = tw;
    Cplx product(Real::from_long(1, wb), Real::from_long(0, wb));
    Cplx weight = product;
    Cplx acc = product;
    for (int j = 1; j <= depth; ++j) {
        scaled_t *= binv;
        product *= alpha(ds, scaled_t);
        weight *= bs_inv;
        acc += weight * product;
    }
    return MgfEvaluation{tw, depth, acc};
}

LimitFunctionEvaluation evaluate_F(const DigitSet& ds, const Cplx& s, const Cplx& t,
                                   const PrecisionContext& ctx) {
    const double sigma = s.re().to_double();
    check_abscissa(ds, sigma);
    const double t_re = t.re().to_double();
    if (!(t_re > 0)) throw DomainError("the limit function requires Re t > 0");

    const long wb = ctx.working_bits();
    const int digits = ctx.target_digits;
    const Cplx sw = at_precision(s, wb);
    const Real lambda = ds.lambda(wb);
    const double lambda_d = ds.lambda_double();
    const DigitSet bset = mirror_set(ds);
    const int b = ds.base();

    const Cplx e_value = evaluate_E(ds, sw, t, ctx).value;
    Cplx tj = at_precision(t, wb);
    Cplx value = cexp(sw * clog(tj)) * cexp(-(tj * lambda)) *
                 phi_series(bset, tj, t_re, digits, wb) * e_value;

    // Positive-scale terms (b^j t)^s e^{-lambda b^j t} phi_B(e^{-b^j t}): the
    // exponential kills them once lambda b^j Re t outweighs the power factor.
    const double s_im = std::abs(s.im().to_double());
    const double log10_t_abs =
        std::log10(std::hypot(t_re, t.im().to_double()));
    const double log10_b = std::log10(static_cast<double>(b));
    const Real b_real = Real::from_long(b, wb);
    int positive_depth = 0;
    double scale = 1.0;
    for (int j = 1; j <= 400; ++j) {
        scale *= b;
        const double term_log10 = sigma * (log10_t_abs + j * log10_b) +
                                  s_im * 1.5707963267948966 * kLog10E -
                                  lambda_d * scale * t_re * kLog10E + 0.5;
        if (term_log10 < -(digits + 2)) break;
        tj *= b_real;
        value += cexp(sw * clog(tj)) * cexp(-(tj * lambda)) *
                 phi_series(bset, tj, scale * t_re, digits, wb);
        positive_depth = j;
    }
    return LimitFunctionEvaluation{at_precision(t, wb), positive_depth, value};
}

Cplx fourier_coefficient(const DigitSet& ds, const Cplx& s, int k,
                         const PrecisionContext& ctx) {
    const double sigma = s.re().to_double();
    check_abscissa(ds, sigma);
    const long wb = ctx.working_bits();
    const int digits = ctx.target_digits;

    const Real log_b = log(Real::from_long(ds.base(), wb));
    const Real shift = Real::pi(wb) * Real::from_long(2L * k, wb) / log_b;
    const Cplx z(at_precision(s.re(), wb), at_precision(s.im(), wb) - shift);
    const Cplx gamma_z = gamma(z, wb);

    const DigitSet bset = mirror_set(ds);
    const Real lambda = ds.lambda(wb);
    Cplx acc = rpow(lambda, -z);  // n = 0

    if (bset.count_nonzero() > 0) {
        // Level-l terms are at most N1 N^{l-1} b^{-sigma(l-1)} in total, a
        // geometric sequence with ratio rho = N/b^sigma.
        const double rho_log10 = log10_level_ratio(bset, sigma);
        const double rho = std::pow(10.0, rho_log10);
        const double n1 = bset.count_nonzero();
        int levels = static_cast<int>(std::ceil(
            (digits + 1 + std::log10(n1) - std::log10(1.0 - rho)) / -rho_log10));
        levels = std::max(levels, 1);
        const double cost = bset.count_below(levels + 1).get_d();
        if (cost > 2e7) {
            throw UnsupportedError("Fourier coefficient at this precision needs ~" +
                                   std::to_string(static_cast<long long>(cost)) +
                                   " admissible terms; lower the target");
        }
        for (int l = 1; l <= levels; ++l) {
            bset.for_each_in_block(l, [&](std::uint64_t n) {
                const Real base = Real::from_ulong(n, wb) + lambda;
                acc += cexp(-(z * log(base)));
            });
        }
    }

    Cplx result = gamma_z * acc;
    result /= log_b;
    return result;
}

namespace {

struct QuadratureRule {
    std::vector<Real> nodes;    // on [0, 1]
    std::vector<Real> weights;  // sum to 1
};

// Gauss-Legendre nodes by Newton refinement of the standard cosine seeds;
// absolute accuracy ~2^{8-bits} is plenty next to the quadrature error.
QuadratureRule gauss_legendre(int order, long bits) {
    QuadratureRule rule;
    const Real one = Real::from_long(1, bits);
    const Real half = Real::from_double(0.5, bits);
    for (int i = 1; i <= order; ++i) {
        const double seed = std::cos(3.141592653589793 * (i - 0.25) / (order + 0.5));
        Real x = Real::from_double(seed, bits);
        Real dp = Real::from_long(0, bits);
        for (int iter = 0; iter < 60; ++iter) {
            Real p_prev = one;
            Real p = x;
            for (int n = 2; n <= order; ++n) {
                Real p_next = (Real::from_long(2 * n - 1, bits) * x * p -
                               Real::from_long(n - 1, bits) * p_prev);
                p_next /= static_cast<long>(n);
                p_prev = p;
                p = p_next;
            }
            dp = Real::from_long(order, bits) * (x * p - p_prev) / (x * x - one);
            const Real dx = p / dp;
            x -= dx;
            if (dx.is_zero() || dx.exp2() < -(bits - 8)) break;
        }
        Real w = Real::from_long(2, bits) / ((one - x * x) * dp * dp);
        rule.nodes.push_back((x + one) * half);
        rule.weights.push_back(w * half);
    }
    return rule;
}

}  // namespace

Cplx fourier_by_quadrature(const DigitSet& ds, const Cplx& s, int k,
                           const PrecisionContext& ctx) {
    const double sigma = s.re().to_double();
    check_abscissa(ds, sigma);
    const long wb = ctx.working_bits();
    const QuadratureRule rule = gauss_legendre(12, wb);
    const Real b_real = Real::from_long(ds.base(), wb);
    const Real two_pi_k = Real::pi(wb) * Real::from_long(2L * k, wb);
    const Real tol = ctx.epsilon();
    const Real zero = Real::from_long(0, wb);

    Cplx previous(zero, zero);
    Cplx estimate(zero, zero);
    for (int panels = 4; panels <= 64; panels *= 2) {
        estimate = Cplx(zero, zero);
        for (int p = 0; p < panels; ++p) {
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                Real u = (Real::from_long(p, wb) + rule.nodes[i]);
                u /= static_cast<long>(panels);
                const Cplx t(pow(b_real, u), zero);
                Cplx sample = evaluate_F(ds, s, t, ctx).value;
                sample *= cexp(Cplx(zero, -(two_pi_k * u)));
                Real w = rule.weights[i];
                w /= static_cast<long>(panels);
                estimate += sample * w;
            }
        }
        if (panels > 4 && abs(estimate - previous) < tol) return estimate;
        previous = estimate;
    }
    return estimate;
}

std::vector<Cplx> mgf_taylor_moments(const DigitSet& ds, const Cplx& s, int M,
                                     const PrecisionContext& ctx) {
    const double sigma = s.re().to_double();
    check_abscissa(ds, sigma);
    if (M < 0) throw UsageError("moment order must be >= 0");
    const long wb = ctx.working_bits();
    const Cplx sw = at_precision(s, wb);
    const int b = ds.base();

    // x(w) <= lambda <= 1 on admissible digit words, so the t^m coefficient
    // of b^{-js} prod_i alpha(b^{-i} t) is at most rho^j / m!.
    const double rho_log10 = log10_level_ratio(ds, sigma);
    const double rho = std::pow(10.0, rho_log10);
    const int depth = std::max(
        1, static_cast<int>(std::ceil(
               (ctx.target_digits + 2 - std::log10(1.0 - rho)) / -rho_log10)));

    const std::vector<mpz_class> power_sums = ds.power_sums(M);
    std::vector<Real> sums_real;
    std::vector<Real> factorial;
    std::vector<Real> inv_factorial;
    mpz_class fact = 1;
    for (int m = 0; m <= M; ++m) {
        if (m > 0) fact *= m;
        sums_real.push_back(Real::from_mpz(power_sums[m], wb));
        factorial.push_back(Real::from_mpz(fact, wb));
        inv_factorial.push_back(Real::from_long(1, wb) / factorial.back());
    }

    const Real zero = Real::from_long(0, wb);
    const Cplx czero(zero, zero);
    std::vector<Cplx> product(M + 1, czero);
    std::vector<Cplx> acc(M + 1, czero);
    product[0] = Cplx(Real::from_long(1, wb), zero);
    acc[0] = product[0];

    const Real binv = Real::from_long(1, wb) / Real::from_long(b, wb);
    const Cplx bs_inv = cinv(rpow(Real::from_long(b, wb), sw));
    Real binv_j = Real::from_long(1, wb);
    Cplx weight(Real::from_long(1, wb), zero);
    std::vector<Cplx> next(M + 1, czero);
    std::vector<Real> coeff(M + 1, zero);
    for (int j = 1; j <= depth; ++j) {
        binv_j *= binv;
        Real bjm = Real::from_long(1, wb);
        for (int m = 0; m <= M; ++m) {
            coeff[m] = sums_real[m] * bjm * inv_factorial[m];
            bjm *= binv_j;
        }
        for (int m = 0; m <= M; ++m) {
            Cplx conv = czero;
            for (int i = 0; i <= m; ++i) conv += product[m - i] * coeff[i];
            next[m] = conv;
        }
        product.swap(next);
        weight *= bs_inv;
        for (int m = 0; m <= M; ++m) acc[m] += weight * product[m];
    }

    std::vector<Cplx> moments;
    moments.reserve(M + 1);
    for (int m = 0; m <= M; ++m) moments.push_back(acc[m] * factorial[m]);
    return moments;
}

}  // namespace rzeta
