#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace etacm {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;

/*
 * Owning wrapper around an mpfr_t.  Every value carries its own precision;
 * binary operations produce a result at the larger of the two operand
 * precisions, rounded to nearest.
 */
class Real {
public:
    explicit Real(Precision prec = kMinPrecision);
    Real(long value, Precision prec);
    Real(double value, Precision prec);
    Real(const mpz_class& value, Precision prec);
    Real(const mpq_class& value, Precision prec);
    Real(std::string_view decimal, Precision prec);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    Precision precision() const { return mpfr_get_prec(value_); }
    /* copy rounded (or extended) to a new precision */
    Real with_precision(Precision prec) const;

    mpfr_ptr raw() { return value_; }
    mpfr_srcptr raw() const { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    mpz_class round() const;
    mpz_class floor() const;
    std::string to_string(int digits = 20) const;

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    /* binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero */
    long exponent() const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);

    static Real pi(Precision prec);

private:
    mpfr_t value_;
};

Real operator-(const Real& x);
Real operator+(const Real& x, const Real& y);
Real operator-(const Real& x, const Real& y);
Real operator*(const Real& x, const Real& y);
Real operator/(const Real& x, const Real& y);
Real operator+(const Real& x, long y);
Real operator-(const Real& x, long y);
Real operator*(const Real& x, long y);
Real operator/(const Real& x, long y);

bool operator==(const Real& x, const Real& y);
std::partial_ordering operator<=>(const Real& x, const Real& y);
std::partial_ordering operator<=>(const Real& x, long y);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real ldexp(const Real& x, long e);

/*
 * Complex number over two Reals of equal precision (ApComplex).
 */
class Complex {
public:
    explicit Complex(Precision prec = kMinPrecision);
    Complex(Real re, Real im);
    Complex(long re, long im, Precision prec);
    Complex(double re, double im, Precision prec);

    Precision precision() const { return re_.precision(); }
    Complex with_precision(Precision prec) const;

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    Complex conj() const;
    /* |z|^2 */
    Real norm() const;
    Real abs() const;
    Real arg() const;

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);

private:
    Real re_;
    Real im_;
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& x, const Complex& y);
Complex operator-(const Complex& x, const Complex& y);
Complex operator*(const Complex& x, const Complex& y);
Complex operator/(const Complex& x, const Complex& y);
Complex operator+(const Complex& x, const Real& y);
Complex operator-(const Complex& x, const Real& y);
Complex operator*(const Complex& x, const Real& y);
Complex operator/(const Complex& x, const Real& y);
Complex operator+(const Complex& x, long y);
Complex operator-(const Complex& x, long y);
Complex operator*(const Complex& x, long y);
Complex operator/(const Complex& x, long y);

Complex exp(const Complex& z);
/* principal branch, Re(sqrt z) >= 0 */
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
/* e^{i theta} */
Complex expi(const Real& theta);

} // namespace etacm
