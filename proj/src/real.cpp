#include "rzeta/real.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "rzeta/errors.hpp"

namespace rzeta {

namespace {

thread_local long g_default_bits = 128;

long max_prec(const Real& a, const Real& b) {
    long pa = a.prec(), pb = b.prec();
    return pa > pb ? pa : pb;
}

}  // namespace

long Real::default_bits() { return g_default_bits; }

void Real::set_default_bits(long bits) {
    g_default_bits = bits < 128 ? 128 : bits;
}

// Bits needed so that unit roundoff is below 10^-digits, plus slack for
// the few ulps each elementary operation may lose.
long Real::bits_for_digits(int decimal_digits) {
    if (decimal_digits < 1) decimal_digits = 1;
    double bits = decimal_digits * 3.3219280948873623 + 16.0;
    return static_cast<long>(bits) + 1;
}

Real Real::from_double(double x, long bits) {
    Real r(bits, nullptr);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::from_long(long x, long bits) {
    Real r(bits, nullptr);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::from_ulong(unsigned long x, long bits) {
    Real r(bits, nullptr);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::from_string(std::string_view s, long bits) {
    Real r(bits, nullptr);
    std::string buf(s);
    if (buf.empty() || mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0) {
        throw UsageError("not a decimal number: '" + buf + "'");
    }
    return r;
}

Real Real::from_mpz(const mpz_class& z, long bits) {
    Real r(bits, nullptr);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_mpq(const mpq_class& q, long bits, mpfr_rnd_t rnd) {
    Real r(bits, nullptr);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Real Real::pi(long bits) {
    Real r(bits, nullptr);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::log_of_ulong(unsigned long n, long bits) {
    Real r = from_ulong(n, bits);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::exp10_of(double log10_value, long bits) {
    Real r = from_double(log10_value, bits);
    mpfr_exp10(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string Real::str_fixed(int frac_digits) const {
    if (frac_digits < 0) frac_digits = 0;
    int need = mpfr_snprintf(nullptr, 0, "%.*RNf", frac_digits, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", frac_digits, v_);
    return std::string(buf.data());
}

std::string Real::str_sci(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    int need = mpfr_snprintf(nullptr, 0, "%.*RNe", sig_digits - 1, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", sig_digits - 1, v_);
    return std::string(buf.data());
}

Real operator+(const Real& a, const Real& b) {
    Real r(max_prec(a, b), nullptr);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(max_prec(a, b), nullptr);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(max_prec(a, b), nullptr);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(max_prec(a, b), nullptr);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r(a.prec(), nullptr);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r(a.prec(), nullptr);
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.prec(), nullptr);
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& a) {
    Real r(a.prec(), nullptr);
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& a) {
    Real r(a.prec(), nullptr);
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& e) {
    Real r(max_prec(base, e), nullptr);
    mpfr_pow(r.v_, base.v_, e.v_, MPFR_RNDN);
    return r;
}

Real pow_ui(const Real& base, unsigned long e) {
    Real r(base.prec(), nullptr);
    mpfr_pow_ui(r.v_, base.v_, e, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(max_prec(y, x), nullptr);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(max_prec(x, y), nullptr);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_set_prec(s.raw(), a.prec());
    mpfr_set_prec(c.raw(), a.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}

double log10_approx(const Real& x) {
    Real r(64, nullptr);
    mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
    return r.to_double();
}

}  // namespace rzeta
