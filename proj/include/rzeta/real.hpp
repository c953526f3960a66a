#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace rzeta {

// Arbitrary-precision real number backed by one mpfr_t.
//
// Precision is explicit and carried per value (in bits). Arithmetic
// results take the larger precision of the two operands; compound
// assignment keeps the precision of the target. All operations round
// to nearest. Small integers and doubles convert exactly, so the
// implicit constructors are safe in mixed expressions.
class Real {
  public:
    static long default_bits();
    static void set_default_bits(long bits);
    static long bits_for_digits(int decimal_digits);

    Real() { mpfr_init2(v_, default_bits()); }
    explicit Real(long prec_bits, std::nullptr_t) { mpfr_init2(v_, prec_bits); }

    Real(double x) {
        mpfr_init2(v_, default_bits());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(int x) : Real(static_cast<long>(x)) {}
    Real(long x) {
        mpfr_init2(v_, default_bits());
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(unsigned long x) {
        mpfr_init2(v_, default_bits());
        mpfr_set_ui(v_, x, MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real with_bits(long bits) { return Real(bits, nullptr); }
    static Real from_double(double x, long bits);
    static Real from_long(long x, long bits);
    static Real from_ulong(unsigned long x, long bits);
    static Real from_string(std::string_view s, long bits);  // base-10; throws UsageError
    static Real from_mpz(const mpz_class& z, long bits);
    static Real from_mpq(const mpq_class& q, long bits, mpfr_rnd_t rnd = MPFR_RNDN);

    static Real pi(long bits);
    static Real log_of_ulong(unsigned long n, long bits);  // ln n
    static Real exp10_of(double log10_value, long bits);   // 10^log10_value

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Base-2 exponent of the leading bit; 0 must be tested separately.
    long exp2() const { return mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Fixed-point decimal rendering with `frac_digits` digits after the
    // point, and scientific rendering with `sig_digits` significant digits.
    std::string str_fixed(int frac_digits) const;
    std::string str_sci(int sig_digits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long k) {
        mpfr_mul_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long k) {
        mpfr_div_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend Real abs(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real pow(const Real& base, const Real& e);
    friend Real pow_ui(const Real& base, unsigned long e);
    friend Real atan2(const Real& y, const Real& x);
    friend Real hypot(const Real& x, const Real& y);
    friend void sin_cos(Real& s, Real& c, const Real& a);
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

  private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real pow(const Real& base, const Real& e);
Real pow_ui(const Real& base, unsigned long e);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
void sin_cos(Real& s, Real& c, const Real& a);

// log10 x as a double (-inf for x = 0); enough accuracy for planning
// and diagnostics even when x itself is far outside double range.
double log10_approx(const Real& x);

}  // namespace rzeta
