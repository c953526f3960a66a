#pragma once

#include <string>

#include "rzeta/real.hpp"

namespace rzeta {

// Rectangular complex number over Real. std::complex requires a
// builtin floating type, so we carry the pair ourselves; only the
// handful of operations the series and MGF code need are provided.
class Cplx {
  public:
    Cplx() = default;
    Cplx(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Cplx(const Real& re) : re_(re), im_(Real::from_long(0, re.prec())) {}
    explicit Cplx(long prec_bits)
        : re_(Real::from_long(0, prec_bits)), im_(Real::from_long(0, prec_bits)) {}

    static Cplx from_doubles(double re, double im, long bits) {
        return Cplx(Real::from_double(re, bits), Real::from_double(im, bits));
    }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    long prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Cplx& operator+=(const Cplx& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Cplx& operator*=(const Cplx& o);
    Cplx& operator*=(const Real& x) {
        re_ *= x;
        im_ *= x;
        return *this;
    }
    Cplx& operator/=(const Real& x) {
        re_ /= x;
        im_ /= x;
        return *this;
    }

    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
    friend Cplx operator*(const Cplx& a, const Cplx& b);
    friend Cplx operator/(const Cplx& a, const Cplx& b);
    friend Cplx operator*(Cplx a, const Real& x) { return a *= x; }
    friend Cplx operator*(const Real& x, Cplx a) { return a *= x; }
    friend Cplx operator-(const Cplx& a) { return Cplx(-a.re_, -a.im_); }

    friend bool operator==(const Cplx& a, const Cplx& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend Cplx conj(const Cplx& a) { return Cplx(a.re_, -a.im_); }
    friend Real abs(const Cplx& a) { return hypot(a.re_, a.im_); }
    friend Real arg(const Cplx& a) { return atan2(a.im_, a.re_); }

    std::string str_sci(int sig_digits) const;

  private:
    Real re_;
    Real im_;
};

Cplx cexp(const Cplx& z);
// Principal branch; z must avoid the origin.
Cplx clog(const Cplx& z);
// base^e for positive real base via exp(e * log base).
Cplx rpow(const Real& base, const Cplx& e);
// n^{-s} at the given precision; exact 1 for n = 1.
Cplx npow_negs(unsigned long n, const Cplx& s, long bits);
Cplx cinv(const Cplx& z);

// Round (or pad) to an explicit precision; values entering a
// computation at working precision go through these.
inline Real at_precision(const Real& x, long bits) {
    return Real::from_long(0, bits) + x;
}
inline Cplx at_precision(const Cplx& z, long bits) {
    return Cplx(at_precision(z.re(), bits), at_precision(z.im(), bits));
}

}  // namespace rzeta
