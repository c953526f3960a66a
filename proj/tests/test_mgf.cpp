#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "rzeta/errors.hpp"
#include "rzeta/mgf.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/oracle.hpp"
#include "rzeta/precision.hpp"

using namespace rzeta;

TEST_CASE("alpha: closed form, digit sum, removable point") {
    const long bits = 256;

    // alpha(0) = N exactly, through the removable singularity
    auto at_zero = alpha(DigitSet::full(2), Cplx(bits));
    CHECK(at_zero.re() == Real::from_long(2, bits));
    CHECK(at_zero.im().is_zero());

    // full alphabet: geometric closed form vs the direct digit sum
    auto full5 = DigitSet::full(5);
    auto t = Cplx::from_doubles(1.5, 0.25, bits);
    Cplx direct(bits);
    for (int d : full5.digits()) direct += cexp(t * Real::from_long(d, bits));
    CHECK(log10_approx(abs(alpha(full5, t) - direct)) < -65);

    // restricted alphabet
    auto ds = DigitSet::parse("1,3", 10);
    Cplx want = cexp(t) + cexp(t * Real::from_long(3, bits));
    CHECK(log10_approx(abs(alpha(ds, t) - want)) < -65);

    // just off a nonzero zero of e^t - 1, where the closed form would melt
    Cplx near_pole(Real::from_double(1e-30, bits),
                   Real::from_long(2, bits) * Real::pi(bits));
    Cplx direct2(bits);
    for (int d : full5.digits()) direct2 += cexp(near_pole * Real::from_long(d, bits));
    CHECK(log10_approx(abs(alpha(full5, near_pole) - direct2)) < -60);
}

TEST_CASE("E: truncation depth control") {
    PrecisionContext ctx(30);
    const long wb = ctx.working_bits();
    auto ds = DigitSet::full(2);
    Cplx s = Cplx::from_doubles(2.5, 0, wb);
    Cplx t = Cplx::from_doubles(1, 0, wb);

    // the empty product: E truncated at depth 0 is exactly 1
    auto none = evaluate_E(ds, s, t, ctx, 0);
    CHECK(none.depth == 0);
    CHECK(none.value == Cplx(Real::from_long(1, none.value.prec())));

    // a shallow truncation sits within the geometric tail of the full one
    auto shallow = evaluate_E(ds, s, t, ctx, 8);
    auto full = evaluate_E(ds, s, t, ctx);
    CHECK(full.depth > 8);
    // tail after J=8: rho^9 e^{Re t} / (1 - rho), rho = 2^{-1.5}
    CHECK(abs(shallow.value - full.value).to_double() < 4e-4);
    CHECK(abs(shallow.value - full.value).to_double() > 0.0);
}

TEST_CASE("E: small-t Taylor remainder against the moment table") {
    PrecisionContext ctx(40);
    const long wb = ctx.working_bits();
    auto ds = DigitSet::full(2);
    Cplx s = Cplx::from_doubles(2.5, 0, wb);
    auto table = build_moment_table(ds, s, 10, ctx);

    Cplx t = Cplx::from_doubles(0.05, 0, wb);
    Cplx partial(wb);
    Cplx t_power(Real::from_long(1, wb));
    Real factorial = Real::from_long(1, wb);
    for (int m = 0; m <= 10; ++m) {
        if (m > 0) {
            t_power *= t;
            factorial *= static_cast<long>(m);
        }
        partial += table.u(m) * t_power / Cplx(factorial);
    }
    auto ev = evaluate_E(ds, s, t, ctx);
    // remainder ~ |u_11| 0.05^11/11! ~ 1e-22
    CHECK(abs(ev.value - partial).to_double() < 1e-18);
}

TEST_CASE("E satisfies its functional equation") {
    PrecisionContext ctx(35);
    const long wb = ctx.working_bits();
    struct Case {
        const char* spec;
        int base;
        double sigma;
    };
    for (Case c : {Case{"all", 2, 2.5}, Case{"0-8", 10, 1.5}}) {
        auto ds = DigitSet::parse(c.spec, c.base);
        Cplx s = Cplx::from_doubles(c.sigma, 0, wb);
        Real inv_b = Real::from_long(1, wb) / Real::from_long(c.base, wb);
        Cplx weight = rpow(Real::from_long(c.base, wb), -s);
        for (auto [re, im] : {std::pair{0.7, 0.3}, std::pair{2.0, 0.0}, std::pair{-1.0, 0.5}}) {
            Cplx t = Cplx::from_doubles(re, im, wb);
            Cplx t_over_b = t * inv_b;
            Cplx lhs = evaluate_E(ds, s, t, ctx).value;
            Cplx rhs = Cplx(Real::from_long(1, wb)) +
                       weight * alpha(ds, t_over_b) * evaluate_E(ds, s, t_over_b, ctx).value;
            CHECK(log10_approx(abs(lhs - rhs)) < -28);
        }
    }
}

TEST_CASE("Taylor route reproduces the recurrence moments") {
    PrecisionContext ctx(30);
    struct Case {
        const char* spec;
        int base;
        double sigma;
    };
    for (Case c : {Case{"all", 2, 2.5}, Case{"0,2", 3, 1.5}}) {
        auto ds = DigitSet::parse(c.spec, c.base);
        Cplx s = Cplx::from_doubles(c.sigma, 0, ctx.working_bits());
        auto taylor = mgf_taylor_moments(ds, s, 8, ctx);
        auto table = build_moment_table(ds, s, 8, ctx.with_extra_guard(10));
        REQUIRE(taylor.size() == 9);
        for (int m = 0; m <= 8; ++m)
            CHECK(log10_approx(abs(taylor[static_cast<std::size_t>(m)] - table.u(m))) < -20);
    }
}

TEST_CASE("F: domain, multiplicative periodicity, degenerate mirror set") {
    PrecisionContext ctx(20);
    const long wb = ctx.working_bits();

    auto ds = DigitSet::full(2);
    Cplx s = Cplx::from_doubles(3, 0, wb);
    CHECK_THROWS_AS(evaluate_F(ds, s, Cplx::from_doubles(-0.5, 1, wb), ctx), DomainError);

    auto f1 = evaluate_F(ds, s, Cplx::from_doubles(1.3, 0, wb), ctx);
    auto f2 = evaluate_F(ds, s, Cplx::from_doubles(2.6, 0, wb), ctx);
    CHECK(f1.positive_depth >= 1);
    CHECK(abs(f1.value - f2.value).to_double() < 1e-15);

    // A = {1}: the mirror set is {0}, phi degenerates to 1, period is b
    auto ones = DigitSet::parse("1", 10);
    Cplx s2 = Cplx::from_doubles(1.5, 0, wb);
    auto g1 = evaluate_F(ones, s2, Cplx::from_doubles(0.8, 0, wb), ctx);
    auto g2 = evaluate_F(ones, s2, Cplx::from_doubles(8.0, 0, wb), ctx);
    CHECK(abs(g1.value - g2.value).to_double() < 1e-15);
}

TEST_CASE("Fourier coefficients: closed form, symmetry, quadrature") {
    PrecisionContext ctx(10);
    const long wb = ctx.working_bits();
    auto ds = DigitSet::full(2);
    Cplx s(Real::from_long(3, wb));

    // k = 0 for the full alphabet: Gamma(s) zeta(s) / log b
    auto c0 = fourier_coefficient(ds, s, 0, ctx);
    auto zeta3 = zeta_reference(Cplx(Real::from_long(3, 200)), 25);
    auto want = zeta3 * (Real::from_long(2, 200) / Real::log_of_ulong(2, 200));
    CHECK(abs(c0 - want).to_double() < 1e-9);

    // real s makes F real on the positive axis: c_{-k} = conj(c_k)
    auto c_plus = fourier_coefficient(ds, s, 1, ctx);
    auto c_minus = fourier_coefficient(ds, s, -1, ctx);
    CHECK(abs(c_plus - conj(c_minus)).to_double() < 1e-8);

    // quadrature agrees with the Gamma-sum formula
    auto q0 = fourier_by_quadrature(ds, s, 0, ctx);
    CHECK(abs(q0 - c0).to_double() < 1e-8);
    auto q1 = fourier_by_quadrature(ds, s, 1, ctx);
    CHECK(abs(q1 - c_plus).to_double() < 1e-7);
}
