#include "etacm/apfloat.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

namespace etacm {

namespace {

Precision checked(Precision prec)
{
    if (prec < kMinPrecision)
        throw std::invalid_argument("precision below 64 bits");
    if (prec > MPFR_PREC_MAX)
        throw std::invalid_argument("precision too large");
    return prec;
}

Precision joint(const Real& x, const Real& y)
{
    return std::max(x.precision(), y.precision());
}

} // namespace

Real::Real(Precision prec)
{
    mpfr_init2(value_, checked(prec));
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec)
{
    mpfr_init2(value_, checked(prec));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision prec)
{
    mpfr_init2(value_, checked(prec));
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec)
{
    mpfr_init2(value_, checked(prec));
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision prec)
{
    mpfr_init2(value_, checked(prec));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, Precision prec)
{
    mpfr_init2(value_, checked(prec));
    std::string s(decimal);
    if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: " + s);
    }
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

Real Real::with_precision(Precision prec) const
{
    Real r(prec);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

mpz_class Real::round() const
{
    mpz_class z;
    Real t(precision());
    mpfr_round(t.value_, value_);
    mpfr_get_z(z.get_mpz_t(), t.value_, MPFR_RNDN);
    return z;
}

mpz_class Real::floor() const
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
    return z;
}

std::string Real::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return buf.data();
}

long Real::exponent() const
{
    if (mpfr_zero_p(value_))
        return LONG_MIN / 2;
    return mpfr_get_exp(value_);
}

Real& Real::operator+=(const Real& rhs)
{
    if (rhs.precision() > precision())
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    if (rhs.precision() > precision())
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    if (rhs.precision() > precision())
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    if (rhs.precision() > precision())
        mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long rhs)
{
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long rhs)
{
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real Real::pi(Precision prec)
{
    Real r(prec);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& x)
{
    Real r(x.precision());
    mpfr_neg(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real operator+(const Real& x, const Real& y)
{
    Real r(joint(x, y));
    mpfr_add(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& x, const Real& y)
{
    Real r(joint(x, y));
    mpfr_sub(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& x, const Real& y)
{
    Real r(joint(x, y));
    mpfr_mul(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& x, const Real& y)
{
    Real r(joint(x, y));
    mpfr_div(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real operator+(const Real& x, long y)
{
    Real r(x.precision());
    mpfr_add_si(r.raw(), x.raw(), y, MPFR_RNDN);
    return r;
}

Real operator-(const Real& x, long y)
{
    Real r(x.precision());
    mpfr_sub_si(r.raw(), x.raw(), y, MPFR_RNDN);
    return r;
}

Real operator*(const Real& x, long y)
{
    Real r(x.precision());
    mpfr_mul_si(r.raw(), x.raw(), y, MPFR_RNDN);
    return r;
}

Real operator/(const Real& x, long y)
{
    Real r(x.precision());
    mpfr_div_si(r.raw(), x.raw(), y, MPFR_RNDN);
    return r;
}

bool operator==(const Real& x, const Real& y)
{
    return mpfr_equal_p(x.raw(), y.raw()) != 0;
}

std::partial_ordering operator<=>(const Real& x, const Real& y)
{
    if (mpfr_unordered_p(x.raw(), y.raw()))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(x.raw(), y.raw());
    return c < 0 ? std::partial_ordering::less
        : c > 0  ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& x, long y)
{
    if (mpfr_nan_p(x.raw()))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(x.raw(), y);
    return c < 0 ? std::partial_ordering::less
        : c > 0  ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

Real abs(const Real& x)
{
    Real r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x)
{
    Real r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x)
{
    Real r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x)
{
    Real r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log2(const Real& x)
{
    Real r(x.precision());
    mpfr_log2(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x)
{
    Real r(x.precision());
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x)
{
    Real r(x.precision());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x)
{
    Real r(joint(x, y));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- Complex

Complex::Complex(Precision prec) : re_(prec), im_(prec) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im))
{
    Precision p = std::max(re_.precision(), im_.precision());
    if (re_.precision() != p)
        re_ = re_.with_precision(p);
    if (im_.precision() != p)
        im_ = im_.with_precision(p);
}

Complex::Complex(long re, long im, Precision prec) : re_(re, prec), im_(im, prec) {}

Complex::Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

Complex Complex::with_precision(Precision prec) const
{
    return Complex(re_.with_precision(prec), im_.with_precision(prec));
}

Complex Complex::conj() const
{
    return Complex(re_, -im_);
}

Real Complex::norm() const
{
    return re_ * re_ + im_ * im_;
}

Real Complex::abs() const
{
    Real r(precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

Real Complex::arg() const
{
    return atan2(im_, re_);
}

Complex& Complex::operator+=(const Complex& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs)
{
    *this = *this * rhs;
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs)
{
    *this = *this / rhs;
    return *this;
}

Complex operator-(const Complex& z)
{
    return Complex(-z.re(), -z.im());
}

Complex operator+(const Complex& x, const Complex& y)
{
    return Complex(x.re() + y.re(), x.im() + y.im());
}

Complex operator-(const Complex& x, const Complex& y)
{
    return Complex(x.re() - y.re(), x.im() - y.im());
}

Complex operator*(const Complex& x, const Complex& y)
{
    return Complex(x.re() * y.re() - x.im() * y.im(), x.re() * y.im() + x.im() * y.re());
}

Complex operator/(const Complex& x, const Complex& y)
{
    Real den = y.norm();
    return Complex((x.re() * y.re() + x.im() * y.im()) / den,
                   (x.im() * y.re() - x.re() * y.im()) / den);
}

Complex operator+(const Complex& x, const Real& y)
{
    return Complex(x.re() + y, x.im().with_precision(std::max(x.precision(), y.precision())));
}

Complex operator-(const Complex& x, const Real& y)
{
    return Complex(x.re() - y, x.im().with_precision(std::max(x.precision(), y.precision())));
}

Complex operator*(const Complex& x, const Real& y)
{
    return Complex(x.re() * y, x.im() * y);
}

Complex operator/(const Complex& x, const Real& y)
{
    return Complex(x.re() / y, x.im() / y);
}

Complex operator+(const Complex& x, long y)
{
    return Complex(x.re() + y, x.im());
}

Complex operator-(const Complex& x, long y)
{
    return Complex(x.re() - y, x.im());
}

Complex operator*(const Complex& x, long y)
{
    return Complex(x.re() * y, x.im() * y);
}

Complex operator/(const Complex& x, long y)
{
    return Complex(x.re() / y, x.im() / y);
}

Complex expi(const Real& theta)
{
    Real s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return Complex(std::move(c), std::move(s));
}

Complex exp(const Complex& z)
{
    return expi(z.im()) * exp(z.re());
}

Complex sqrt(const Complex& z)
{
    Precision p = z.precision();
    if (z.re().is_zero() && z.im().is_zero())
        return Complex(p);
    Real r = z.abs();
    if (z.re().sign() >= 0) {
        Real re = sqrt((r + z.re()) / 2L);
        Real im = z.im() / (re * 2L);
        return Complex(std::move(re), std::move(im));
    }
    Real im = sqrt((r - z.re()) / 2L);
    if (z.im().sign() < 0)
        im = -im;
    Real re = z.im() / (im * 2L);
    return Complex(std::move(re), std::move(im));
}

Complex pow(const Complex& z, long n)
{
    if (n < 0)
        return Complex(1L, 0L, z.precision()) / pow(z, -n);
    Complex result(1L, 0L, z.precision());
    Complex base = z;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

} // namespace etacm
