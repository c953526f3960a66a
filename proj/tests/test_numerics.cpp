#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <vector>

#include "rzeta/bernoulli.hpp"
#include "rzeta/complexmp.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/gammafn.hpp"
#include "rzeta/precision.hpp"
#include "rzeta/real.hpp"

using namespace rzeta;

namespace {

// Independent Bernoulli oracle: the Akiyama-Tanigawa triangle in exact
// rationals. Its sign convention has B_1 = +1/2, so only even indices
// are comparable with the cache (odd indices > 1 vanish both ways).
mpq_class bernoulli_triangle(int n) {
    std::vector<mpq_class> row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) row[static_cast<std::size_t>(j)] = mpq_class(1, j + 1);
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j <= n - k; ++j) {
            auto& a = row[static_cast<std::size_t>(j)];
            a = (a - row[static_cast<std::size_t>(j) + 1]) * (j + 1);
        }
    return row[0];
}

}  // namespace

TEST_CASE("precision is explicit and propagates by the larger operand") {
    auto a = Real::from_long(1, 64);
    auto b = Real::from_long(1, 256);
    CHECK((a + b).prec() == 256);
    CHECK((b * a).prec() == 256);

    auto c = Real::from_long(3, 128);
    c /= 2L;  // compound assignment keeps the target precision
    CHECK(c.prec() == 128);
    CHECK(c == Real::from_double(1.5, 64));

    CHECK(Real::bits_for_digits(50) >= 167);
    CHECK(Real::bits_for_digits(100) > Real::bits_for_digits(50));
}

TEST_CASE("exact conversions and string handling") {
    CHECK(Real::from_string("2.5", 128) * Real::from_long(4, 128) == Real::from_long(10, 128));
    CHECK(Real::from_string("1.25", 128).str_fixed(2) == "1.25");
    CHECK(Real::from_string("-0.5", 128).str_fixed(1) == "-0.5");
    CHECK_THROWS_AS(Real::from_string("zebra", 128), UsageError);
    CHECK_THROWS_AS(Real::from_string("", 128), UsageError);
    CHECK(Real::from_mpq(mpq_class(1, 3), 200).str_fixed(5) == "0.33333");
    CHECK(Real::from_mpz(mpz_class("123456789123456789"), 200).str_fixed(0) ==
          "123456789123456789");
}

TEST_CASE("pi to fifty places") {
    CHECK(Real::pi(512).str_fixed(50) ==
          "3.14159265358979323846264338327950288419716939937511");
}

TEST_CASE("elementary functions invert at working precision") {
    auto x = Real::from_string("3.7", 300);
    CHECK(log10_approx(abs(log(exp(x)) - x)) < -85);
    CHECK(log10_approx(abs(sqrt(x) * sqrt(x) - x)) < -85);
    CHECK(log10_approx(abs(Real::log_of_ulong(8, 300) -
                           Real::from_long(3, 300) * Real::log_of_ulong(2, 300))) < -85);
    CHECK(log10_approx(Real::exp10_of(-25, 128)) == doctest::Approx(-25.0));
}

TEST_CASE("complex primitives") {
    const long bits = 256;
    auto z = Cplx::from_doubles(3, 4, bits);
    CHECK(abs(z) == Real::from_long(5, bits));
    CHECK(arg(conj(z)) == -arg(z));

    // e^{i pi} = -1
    auto spin = cexp(Cplx(Real::from_long(0, bits), Real::pi(bits)));
    CHECK(log10_approx(abs(spin + Cplx(Real::from_long(1, bits)))) < -70);

    // log / exp round trip, principal branch
    CHECK(log10_approx(abs(cexp(clog(z)) - z)) < -70);

    // positive real base powers
    auto eight = rpow(Real::from_long(2, bits), Cplx(Real::from_long(3, bits)));
    CHECK(log10_approx(abs(eight - Cplx(Real::from_long(8, bits)))) < -70);

    // reciprocal
    CHECK(log10_approx(abs(cinv(z) * z - Cplx(Real::from_long(1, bits)))) < -70);

    // multiplication against hand values: (3+4i)(1-2i) = 11 - 2i
    auto w = z * Cplx::from_doubles(1, -2, bits);
    CHECK(log10_approx(abs(w - Cplx::from_doubles(11, -2, bits))) < -70);
}

TEST_CASE("n^-s is exact at n = 1 and matches hand values") {
    const long bits = 256;
    auto s = Cplx::from_doubles(2.5, 3.0, bits);
    auto one = npow_negs(1, s, bits);
    CHECK(one.re() == Real::from_long(1, bits));
    CHECK(one.im().is_zero());

    auto q = npow_negs(4, Cplx(Real::from_long(2, bits)), bits);
    CHECK(log10_approx(abs(q - Cplx(Real::from_double(0.0625, bits)))) < -70);

    // |n^{-s}| = n^{-Re s} regardless of the imaginary part
    auto v = npow_negs(7, s, bits);
    auto want = pow(Real::from_long(7, bits), Real::from_string("-2.5", bits));
    CHECK(log10_approx(abs(abs(v) - want)) < -70);
}

TEST_CASE("Bernoulli cache against the triangle scheme") {
    auto& cache = bernoulli_cache();
    CHECK(cache.number(0) == 1);
    CHECK(cache.number(1) == mpq_class(-1, 2));
    CHECK(cache.number(12) == mpq_class(-691, 2730));
    CHECK(cache.even(6) == mpq_class(-691, 2730));
    for (int n = 3; n <= 31; n += 2) CHECK(cache.number(n) == 0);
    for (int n = 2; n <= 30; n += 2) CHECK(cache.number(n) == bernoulli_triangle(n));
}

TEST_CASE("gamma at integers and the classical modulus identity") {
    const long bits = 512;
    CHECK(gamma_real(Real::from_long(5, bits)) == Real::from_long(24, bits));

    // |Gamma(1+i)|^2 = pi / sinh(pi)
    auto g = gamma(Cplx::from_doubles(1, 1, bits), bits);
    auto p = Real::pi(bits);
    auto sinh_pi = (exp(p) - exp(-p)) / Real::from_long(2, bits);
    CHECK(log10_approx(abs(abs(g) - sqrt(p / sinh_pi))) < -100);

    // Gamma(z+1) = z Gamma(z) on the genuinely complex (Stirling) path
    auto zc = Cplx::from_doubles(2.25, 7.5, bits);
    auto g0 = gamma(zc, bits);
    auto g1 = gamma(zc + Cplx(Real::from_long(1, bits)), bits);
    CHECK(log10_approx(abs(g1 - zc * g0) / abs(g1)) < -130);
    // Schwarz reflection
    CHECK(log10_approx(abs(gamma(conj(zc), bits) - conj(g0)) / abs(g0)) < -130);

    // frozen reference for a tall argument: Gamma(3)/|Gamma(3+10i)|
    auto g10 = gamma(Cplx::from_doubles(3, 10, bits), bits);
    auto ratio = gamma_real(Real::from_long(3, bits)) / abs(g10);
    auto frozen = Real::from_string("16335.95295910922654019394", bits);
    CHECK(log10_approx(abs(ratio - frozen)) < -14);
}

TEST_CASE("planning-grade gamma estimates stay on the safe side") {
    const double truth = 16335.95295910922654;  // Gamma(3)/|Gamma(3+10i)|
    double bound = pochhammer_ratio_bound(2.0, {2.0, 10.0});
    CHECK(bound >= truth);
    CHECK(bound <= truth * 1.001);

    CHECK(log10_pochhammer_ratio(2.0, {2.0, 10.0}) ==
          doctest::Approx(std::log10(truth)).epsilon(1e-9));
    CHECK(log10_pochhammer_ratio(2.0, {2.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(log_abs_gamma({3.0, 10.0}) ==
          doctest::Approx(std::log(2.0 / truth)).epsilon(1e-10));
    CHECK(log_abs_gamma({5.0, 0.0}) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
}

TEST_CASE("precision context policy") {
    PrecisionContext ctx(50);
    CHECK(ctx.guard_digits == 10);
    CHECK(ctx.working_digits() == 60);
    CHECK(log10_approx(ctx.epsilon()) == doctest::Approx(-50.0));
    CHECK(PrecisionContext(30, 4).guard_digits == 10);  // floor
    CHECK(ctx.with_extra_guard(7).guard_digits == 17);
    CHECK_THROWS_AS(PrecisionContext(0), UsageError);
}
