#include "etacm/eta.hpp"

#include "etacm/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace etacm {

namespace {

constexpr int kMaxReductionSteps = 100000;
constexpr int kMaxSeriesTerms = 1 << 20;

int bit_length(u64 x)
{
    return 64 - std::countl_zero(x);
}

void require_precision(Precision prec)
{
    if (prec < kMinPrecision)
        throw Error(ErrorKind::invalid_argument, "precision must be at least 64 bits");
}

/* q = e^{2 pi i tau k} */
Complex q_power(const Complex& tau, long numerator, long denominator)
{
    Precision p = tau.precision();
    Real two_pi = Real::pi(p) * 2L;
    Complex arg(-(tau.im() * two_pi * numerator) / denominator, (tau.re() * two_pi * numerator) / denominator);
    return exp(arg);
}

/*
 * Pentagonal-number sum  1 + sum_{k>=1} (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2}),
 * i.e. prod_{n>=1} (1 - q^n), for |q| well below one.
 */
Complex pentagonal_sum(const Complex& q)
{
    Precision p = q.precision();
    long cutoff = -static_cast<long>(p) - 8;
    Complex sum(1L, 0L, p);
    Complex q3 = q * q * q;
    Complex step = q3 * q; // q^{3k+1} for k = 1
    Complex qk = q;        // q^k
    Complex minus = q;     // q^{k(3k-1)/2}
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        Complex plus = minus * qk;
        if (k & 1) {
            sum -= minus;
            sum -= plus;
        } else {
            sum += minus;
            sum += plus;
        }
        if (minus.abs().exponent() < cutoff)
            return sum;
        minus *= step;
        step *= q3;
        qk *= q;
    }
    throw Error(ErrorKind::precision_exhausted, "eta series did not converge");
}

/* -log2 |q| at tau, i.e. 2 pi im(tau) / ln 2, as a double */
double q_decay_bits(const Complex& tau)
{
    return 9.0647202836543876 * tau.im().to_double();
}

Precision series_guard(const Complex& tau, Precision prec)
{
    double decay = std::max(q_decay_bits(tau), 1.0);
    double terms = std::sqrt(2.0 * static_cast<double>(prec) / (3.0 * decay)) + 2.0;
    return 32 + static_cast<Precision>(std::ceil(std::log2(terms + 1.0)));
}

} // namespace

UpperHalfPoint::UpperHalfPoint(Complex z) : z_(std::move(z))
{
    if (!(z_.im() > 0L))
        throw Error(ErrorKind::invalid_argument, "point is not in the upper half-plane");
}

FundamentalDomainReduction reduce_to_fundamental_domain(const UpperHalfPoint& point)
{
    Complex z = point.value();
    Mat2 m = Mat2::identity();
    Real half(0.5, z.precision());
    for (int step = 0; step < kMaxReductionSteps; ++step) {
        mpz_class n = z.re().round();
        if (n != 0) {
            if (!n.fits_slong_p())
                throw Error(ErrorKind::precision_exhausted, "translation out of range");
            long shift = n.get_si();
            z = z - shift;
            m = Mat2::translation(-shift) * m;
        }
        if (z.norm() < 1L) {
            z = Complex(-1L, 0L, z.precision()) / z;
            m = Mat2::inversion() * m;
            continue;
        }
        if (abs(z.re()) <= half) {
            if (!(z.im() > 0L))
                throw Error(ErrorKind::precision_exhausted, "imaginary part lost during reduction");
            return {UpperHalfPoint(std::move(z)), m};
        }
    }
    throw Error(ErrorKind::precision_exhausted, "fundamental-domain reduction did not terminate");
}

Complex EtaMultiplierData::value(Precision prec) const
{
    Real angle = Real::pi(prec) * static_cast<long>(exponent24) / 12L;
    Complex z = expi(angle);
    return sign < 0 ? -z : z;
}

EtaMultiplierData eta_multiplier(const Mat2& input)
{
    if (input.det() != 1)
        throw Error(ErrorKind::invalid_argument, "eta multiplier needs a determinant-one matrix");
    Mat2 m = input;
    if (m.c < 0 || (m.c == 0 && m.d < 0))
        m = m.negated();

    EtaMultiplierData out;
    out.matrix = m;
    if (m.c == 0) {
        out.gamma = 1;
        out.lambda = 1;
    } else {
        out.gamma = m.c;
        out.lambda = 0;
        while ((out.gamma & 1) == 0) {
            out.gamma >>= 1;
            ++out.lambda;
        }
    }
    out.sign = jacobi(m.a, out.gamma);

    // Everything is reduced mod 48 so that the halved term stays exact.
    auto r48 = [](i128 x) {
        i128 r = x % 48;
        return r < 0 ? r + 48 : r;
    };
    i128 a = m.a, b = m.b, c = m.c, d = m.d;
    i128 e = r48(r48(a) * r48(b));
    e += r48(r48(c) * r48(r48(d) * r48(1 - r48(a) * r48(a)) - r48(a)));
    e += r48(3 * r48(out.gamma) * r48(a - 1));
    // 3/2 lambda (a^2 - 1) is an integer: either a is odd (8 | a^2-1) or lambda = 0
    i128 half_term = 0;
    if (out.lambda != 0) {
        i128 a2m1 = r48(r48(a) * r48(a) - 1); // even, so halving mod 48 is exact mod 24
        half_term = r48(3 * out.lambda * (a2m1 / 2));
    }
    e += half_term;
    out.exponent24 = static_cast<int>(((e % 24) + 24) % 24);
    return out;
}

Complex eta(const UpperHalfPoint& z, Precision prec)
{
    require_precision(prec);
    Precision reduce_prec = std::max(z.precision(), prec + 32);
    Complex zin = z.value().with_precision(reduce_prec);
    auto red = reduce_to_fundamental_domain(UpperHalfPoint(zin));

    EtaMultiplierData eps = eta_multiplier(red.matrix);
    const Mat2& m = eps.matrix;
    Precision wp = prec + series_guard(red.point.value(), prec)
        + 2 * bit_length(static_cast<u64>(m.max_entry()));

    Complex tau = apply(m, zin).with_precision(wp);
    Complex q = q_power(tau, 1, 1);
    Complex eta_tau = q_power(tau, 1, 24) * pentagonal_sum(q);

    // eta(tau) = eps(M) sqrt(cz + d) eta(z)
    Complex czd = zin.with_precision(std::max(wp, reduce_prec)) * m.c + m.d;
    Complex factor = eps.value(wp) * sqrt(czd).with_precision(wp);
    return (eta_tau / factor).with_precision(prec);
}

Complex j_invariant(const UpperHalfPoint& z, Precision prec)
{
    require_precision(prec);
    Precision reduce_prec = std::max(z.precision(), prec + 32);
    auto red = reduce_to_fundamental_domain(UpperHalfPoint(z.value().with_precision(reduce_prec)));
    const Complex& tau0 = red.point.value();

    // |J| is about |q|^{-1}; carry that many extra bits for an absolute bound.
    Precision magnitude = static_cast<Precision>(std::ceil(q_decay_bits(tau0)));
    Precision wp = prec + series_guard(tau0, prec) + magnitude + 16;
    Complex tau = tau0.with_precision(wp);
    Complex q = q_power(tau, 1, 1);

    // E4 = 1 + 240 sum n^3 q^n / (1 - q^n)
    long cutoff = -static_cast<long>(wp) - 8;
    Complex e4_tail(wp);
    Complex qn = q;
    for (long n = 1;; ++n) {
        if (n > kMaxSeriesTerms)
            throw Error(ErrorKind::precision_exhausted, "E4 series did not converge");
        Complex term = qn * (n * n * n) / (Complex(1L, 0L, wp) - qn);
        e4_tail += term;
        if (term.abs().exponent() < cutoff)
            break;
        qn *= q;
    }
    Complex e4 = e4_tail * 240L + 1L;
    Complex e4_cubed = e4 * e4 * e4;
    Complex delta = q * pow(pentagonal_sum(q), 24);
    return (e4_cubed / delta).with_precision(prec);
}

void require_distinct_odd_primes(i64 p1, i64 p2)
{
    if (p1 == p2)
        throw Error(ErrorKind::invalid_argument, "p1 and p2 must be distinct");
    for (i64 p : {p1, p2}) {
        if (p < 3 || !is_prime(static_cast<u64>(p)))
            throw Error(ErrorKind::invalid_argument, "p1 and p2 must be odd primes");
    }
}

int eta_quotient_exponent(int p1, int p2)
{
    return static_cast<int>(24 / gcd(24, static_cast<i64>(p1 - 1) * (p2 - 1)));
}

Complex double_eta_quotient(const UpperHalfPoint& z, int p1, int p2, Precision prec)
{
    require_precision(prec);
    require_distinct_odd_primes(p1, p2);
    const long n = static_cast<long>(p1) * p2;
    Precision zp = std::max(z.precision(), prec + 64);
    Complex zz = z.value().with_precision(zp);

    auto evaluate = [&](Precision wp) {
        Complex num = eta(UpperHalfPoint(zz / static_cast<long>(p1)), wp)
            * eta(UpperHalfPoint(zz / static_cast<long>(p2)), wp);
        Complex den = eta(UpperHalfPoint(zz), wp) * eta(UpperHalfPoint(zz / n), wp);
        return num / den;
    };

    Complex w = evaluate(prec + 32);
    long e = w.abs().exponent();
    if (e > 16)
        w = evaluate(prec + 32 + e);
    return w.with_precision(prec);
}

Complex w_pow_s(const UpperHalfPoint& z, int p1, int p2, Precision prec)
{
    int s = eta_quotient_exponent(p1, p2);
    Complex w = double_eta_quotient(z, p1, p2, prec + 16);
    long e = w.abs().exponent();
    if (s > 1 && e > 0)
        w = double_eta_quotient(z, p1, p2, prec + 16 + (s - 1) * e);
    return pow(w, s).with_precision(prec);
}

} // namespace etacm
