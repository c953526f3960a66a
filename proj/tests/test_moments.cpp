#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <cmath>
#include <vector>

#include "rzeta/bernoulli.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/precision.hpp"

using namespace rzeta;

namespace {

// Independent route to the same numbers: the raw recurrence
//   (b^{m+s} - N) u_m = sum_{j=1..m} C(m,j) S_j u_{m-j}
// in exact rationals at integer s. The production table runs the
// starred/normalized form in floating point, so matching digits here
// checks the normalization bookkeeping, not just the arithmetic.
std::vector<mpq_class> raw_rational_moments(const DigitSet& ds, long s, int M) {
    const auto S = ds.power_sums(M);
    const long b = ds.base();
    const long N = ds.count();

    auto b_pow = [&](long e) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b),
                      static_cast<unsigned long>(e));
        return p;
    };

    std::vector<mpq_class> u(static_cast<std::size_t>(M) + 1);
    u[0] = mpq_class(b_pow(s)) / mpq_class(b_pow(s) - N);

    std::vector<mpz_class> binom(static_cast<std::size_t>(M) + 1);
    for (int m = 1; m <= M; ++m) {
        binom[0] = 1;
        for (int j = 1; j <= m; ++j)
            binom[static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(j) - 1] * (m - j + 1) / j;
        mpq_class acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += mpq_class(binom[static_cast<std::size_t>(j)] * S[static_cast<std::size_t>(j)]) *
                   u[static_cast<std::size_t>(m - j)];
        u[static_cast<std::size_t>(m)] = acc / mpq_class(b_pow(m + s) - N);
    }
    return u;
}

Cplx real_arg(double x, long bits) { return Cplx(Real::from_double(x, bits)); }

}  // namespace

TEST_CASE("mass and first moments against exact rationals (full alphabet)") {
    auto ds = DigitSet::full(10);
    PrecisionContext ctx(60);
    auto table = build_moment_table(ds, real_arg(2, ctx.working_bits()), 8, ctx);

    auto want = raw_rational_moments(ds, 2, 8);
    CHECK(want[0] == mpq_class(10, 9));  // b^s/(b^s - N) = 100/90
    CHECK(want[1] == mpq_class(5, 99));  // S_1 u_0 / (b^{s+1} - N)

    CHECK(log10_approx(abs(table.mass - Cplx(Real::from_mpq(want[0], 256)))) < -50);
    for (int m = 0; m <= 8; ++m) {
        auto target = Real::from_mpq(want[static_cast<std::size_t>(m)], 256);
        CHECK(log10_approx(abs(table.u(m) - Cplx(target))) < -50);
    }
}

TEST_CASE("restricted alphabet against exact rationals") {
    auto ds = DigitSet::parse("0-8", 10);
    PrecisionContext ctx(60);
    auto table = build_moment_table(ds, real_arg(1, ctx.working_bits()), 12, ctx);
    auto want = raw_rational_moments(ds, 1, 12);
    for (int m = 0; m <= 12; ++m) {
        auto target = Real::from_mpq(want[static_cast<std::size_t>(m)], 256);
        CHECK(log10_approx(abs(table.u(m) - Cplx(target))) < -50);
    }
}

TEST_CASE("Bernoulli closed form meets the recurrence, and cancels badly") {
    PrecisionContext ctx(80);
    auto& cache = bernoulli_cache();
    auto ds = DigitSet::full(2);
    Cplx s = real_arg(3, ctx.working_bits());
    auto table = build_moment_table(ds, s, 40, ctx);
    for (int m : {0, 1, 2, 5, 10, 20, 30, 40}) {
        auto cf = moment_closed_form(2, s, m, cache, ctx);
        CHECK(log10_approx(abs(cf - table.u(m))) < -55);
    }
    // the cancellation that motivates the recurrence path
    CHECK(closed_form_cancellation_ratio(2, s, 30, cache, ctx) > 1e6);
    CHECK(closed_form_cancellation_ratio(2, s, 4, cache, ctx) < 1e3);
}

TEST_CASE("raw moments are periodic in s with period 2 pi i / log b") {
    PrecisionContext ctx(45);
    const long wb = ctx.working_bits();
    auto ds = DigitSet::parse("1,3,7", 10);
    Cplx s = Cplx::from_doubles(2, 3, wb);
    Cplx period(Real::from_long(0, wb),
                Real::from_long(2, wb) * Real::pi(wb) / Real::log_of_ulong(10, wb));
    auto base_table = build_moment_table(ds, s, 25, ctx);
    auto shifted = build_moment_table(ds, s + period, 25, ctx);
    for (int m = 0; m <= 25; ++m) {
        CHECK(log10_approx(abs(base_table.raw_normalized(m) - shifted.raw_normalized(m))) < -35);
        CHECK(log10_approx(abs(base_table.u(m) - shifted.u(m))) < -35);
    }
    // the starred sequence is not periodic: the shift has to show somewhere
    CHECK(log10_approx(abs(base_table.c(25) - shifted.c(25))) > -10);
}

TEST_CASE("upper bound dominates |u*_m| across sets and arguments") {
    PrecisionContext ctx(40);
    const long wb = ctx.working_bits();
    struct Case {
        const char* spec;
        int base;
        double sigma;
        double t;
    };
    for (Case c : {Case{"all", 2, 2.5, 0.0}, Case{"all", 2, 2.0, 18.0},
                   Case{"0-8", 10, 1.2, 40.0}, Case{"1,3,7", 10, 1.0, 5.0},
                   Case{"0,2", 3, 1.0, -7.0}, Case{"1", 10, 0.5, 3.0}}) {
        auto ds = DigitSet::parse(c.spec, c.base);
        Cplx s = Cplx::from_doubles(c.sigma, c.t, wb);
        auto table = build_moment_table(ds, s, 120, ctx);
        for (int m = 0; m <= 120; m += 5) {
            auto cap = bound_u_star(ds, s, m, wb);
            CHECK(abs(table.u_star(m)) <= cap);
        }
    }
}

TEST_CASE("lower bound stays strictly below on the real axis") {
    PrecisionContext ctx(40);
    const long wb = ctx.working_bits();
    for (int base : {2, 10}) {
        auto ds = DigitSet::full(base);
        for (double sigma : {1.5, 2.0, 4.0}) {
            auto table = build_moment_table(ds, real_arg(sigma, wb), 100, ctx);
            auto sig = Real::from_double(sigma, wb);
            for (int m = 0; m <= 100; m += 10) {
                CHECK(lower_bound_u_star(ds, sig, m, wb) < table.u_star(m).re());
            }
        }
    }
    // formula spot check: lambda^5/(b - N) for digits 1..8 at sigma = 1
    auto ds18 = DigitSet::parse("1-8", 10);
    auto lb = lower_bound_u_star(ds18, Real::from_long(1, 128), 5, 128);
    const double want = std::pow(8.0 / 9.0, 5) / 2.0;
    CHECK(lb.to_double() == doctest::Approx(want).epsilon(1e-6));
    CHECK(lb.to_double() <= want);
}

TEST_CASE("rational mode: the constant sequence and the floating table") {
    auto ones = rational_normalized_moments(DigitSet::full(2), 1, 30);
    REQUIRE(ones.size() == 31);
    for (const auto& q : ones) CHECK(q == 1);

    auto c2 = rational_normalized_moments(DigitSet::full(2), 2, 6);
    CHECK(c2[0] == 1);
    PrecisionContext ctx(40);
    auto table = build_moment_table(DigitSet::full(2), real_arg(2, ctx.working_bits()), 6, ctx);
    for (int m = 0; m <= 6; ++m) {
        auto target = Real::from_mpq(c2[static_cast<std::size_t>(m)], 200);
        CHECK(log10_approx(abs(table.c(m) - Cplx(target))) < -30);
    }
}

TEST_CASE("abscissa enforcement") {
    PrecisionContext ctx(30);
    const long wb = ctx.working_bits();
    CHECK_THROWS_AS(build_moment_table(DigitSet::parse("0-8", 10), real_arg(0.95, wb), 5, ctx),
                    DomainError);
    CHECK_THROWS_AS(build_moment_table(DigitSet::full(2), real_arg(1, wb), 5, ctx), DomainError);
}
