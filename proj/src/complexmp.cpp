#include "rzeta/complexmp.hpp"

namespace rzeta {

Cplx& Cplx::operator*=(const Cplx& o) {
    *this = *this * o;
    return *this;
}

Cplx operator*(const Cplx& a, const Cplx& b) {
    // Fast paths keep purely real factors exact (the series multiplies
    // complex moments by real block sums constantly).
    if (b.is_real()) return Cplx(a.re_ * b.re_, a.im_ * b.re_);
    if (a.is_real()) return Cplx(a.re_ * b.re_, a.re_ * b.im_);
    return Cplx(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    if (b.is_real()) return Cplx(a.re() / b.re(), a.im() / b.re());
    // MPFR exponents span far beyond any value this library produces,
    // so the textbook formula cannot overflow here.
    Real d = b.re() * b.re() + b.im() * b.im();
    return Cplx((a.re() * b.re() + a.im() * b.im()) / d,
                (a.im() * b.re() - a.re() * b.im()) / d);
}

Cplx cinv(const Cplx& z) {
    if (z.is_real()) {
        return Cplx(Real::from_long(1, z.prec()) / z.re(), Real::from_long(0, z.prec()));
    }
    Real d = z.re() * z.re() + z.im() * z.im();
    return Cplx(z.re() / d, -z.im() / d);
}

Cplx cexp(const Cplx& z) {
    Real m = exp(z.re());
    if (z.im().is_zero()) return Cplx(m, Real::from_long(0, z.prec()));
    Real s(z.im().prec(), nullptr), c(z.im().prec(), nullptr);
    sin_cos(s, c, z.im());
    return Cplx(m * c, m * s);
}

Cplx clog(const Cplx& z) {
    return Cplx(log(abs(z)), arg(z));
}

Cplx rpow(const Real& base, const Cplx& e) {
    if (e.is_real()) return Cplx(pow(base, e.re()), Real::from_long(0, e.prec()));
    Real lb = log(base);
    return cexp(Cplx(e.re() * lb, e.im() * lb));
}

Cplx npow_negs(unsigned long n, const Cplx& s, long bits) {
    if (n == 1) return Cplx(Real::from_long(1, bits), Real::from_long(0, bits));
    Real base = Real::from_ulong(n, bits);
    if (s.is_real()) {
        Real p = pow(base, -Real(s.re()));
        return Cplx(p, Real::from_long(0, bits));
    }
    Real lb = log(base);
    return cexp(Cplx(-(s.re() * lb), -(s.im() * lb)));
}

std::string Cplx::str_sci(int sig_digits) const {
    std::string out = re_.str_sci(sig_digits);
    if (!im_.is_zero()) {
        std::string im = im_.str_sci(sig_digits);
        if (!im.empty() && im[0] == '-') {
            out += " - " + im.substr(1) + "i";
        } else {
            out += " + " + im + "i";
        }
    }
    return out;
}

}  // namespace rzeta
