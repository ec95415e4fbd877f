#pragma once

// Independent reference computations used only by the tests.  They share the
// multiprecision number types with the library but none of its algorithms.

#include "etacm/apfloat.hpp"
#include "etacm/arith.hpp"
#include "etacm/zpoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using etacm::Complex;
using etacm::i64;
using etacm::Precision;
using etacm::Real;
using etacm::u64;

inline i64 gcd3(i64 a, i64 b, i64 c)
{
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

/* reduced primitive triples found by scanning a, c and b directly */
inline std::vector<std::array<i64, 3>> reduced_forms(i64 d)
{
    const i64 ad = -d;
    std::vector<std::array<i64, 3>> out;
    for (i64 a = 1; a <= ad; ++a) {
        if (3 * a * a > ad)
            break;
        for (i64 c = a; 4 * a * c <= ad + a * a; ++c) {
            for (i64 b = -a; b <= a; ++b) {
                if (b * b - 4 * a * c != d)
                    continue;
                if (b == -a || (a == c && b < 0))
                    continue;
                if (gcd3(a, b, c) != 1)
                    continue;
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

inline i64 class_number(i64 d)
{
    return static_cast<i64>(reduced_forms(d).size());
}

/* (a|p) by listing the squares mod p */
inline int legendre_by_squares(i64 a, i64 p)
{
    i64 r = ((a % p) + p) % p;
    if (r == 0)
        return 0;
    for (i64 x = 1; x < p; ++x) {
        if (x * x % p == r)
            return 1;
    }
    return -1;
}

/* roots of a polynomial (lowest degree first, reduced mod l) by evaluation at every residue */
inline std::vector<u64> roots_by_exhaustion(const std::vector<u64>& c, u64 l)
{
    std::vector<u64> out;
    for (u64 x = 0; x < l; ++x) {
        u64 acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = static_cast<u64>((static_cast<unsigned __int128>(acc) * x + *it) % l);
        if (acc == 0)
            out.push_back(x);
    }
    return out;
}

/* multiplicity of r as a root, by synthetic division mod l */
inline int multiplicity_by_division(std::vector<u64> c, u64 r, u64 l)
{
    int m = 0;
    while (c.size() > 1) {
        std::vector<u64> q(c.size() - 1);
        u64 carry = 0;
        for (std::size_t k = c.size(); k-- > 1;) {
            carry = static_cast<u64>((static_cast<unsigned __int128>(carry) * r + c[k]) % l);
            q[k - 1] = carry;
        }
        u64 rem = static_cast<u64>((static_cast<unsigned __int128>(carry) * r + c[0]) % l);
        if (rem != 0)
            break;
        c = q;
        ++m;
    }
    return m;
}

inline Complex q_of(const Complex& tau, Precision p)
{
    Real two_pi = Real::pi(p) * 2L;
    return etacm::exp(Complex(-(tau.im() * two_pi), tau.re() * two_pi));
}

/* q^(1/24) prod (1 - q^n) summed directly at tau, no modular reduction */
inline Complex eta_product(const Complex& tau, Precision p)
{
    Precision wp = p + 40;
    Complex t = tau.with_precision(wp);
    Complex q = q_of(t, wp);
    Real two_pi = Real::pi(wp) * 2L;
    Complex q24 = etacm::exp(Complex(-(t.im() * two_pi) / 24L, (t.re() * two_pi) / 24L));
    Complex prod(1L, 0L, wp);
    Complex qn = q;
    for (int n = 1; n < 2000000; ++n) {
        prod = prod * (Complex(1L, 0L, wp) - qn);
        if (qn.abs().exponent() < -static_cast<long>(wp) - 8)
            break;
        qn = qn * q;
    }
    return (q24 * prod).with_precision(p);
}

inline i64 sigma(i64 n, int k)
{
    i64 s = 0;
    for (i64 d = 1; d <= n; ++d) {
        if (n % d == 0) {
            i64 t = 1;
            for (int i = 0; i < k; ++i)
                t *= d;
            s += t;
        }
    }
    return s;
}

/* j = 1728 E4^3 / (E4^3 - E6^2) from the divisor-sum q-expansions; tau should be reduced */
inline Complex j_from_eisenstein(const Complex& tau, Precision p)
{
    Precision wp = p + 64;
    Complex q = q_of(tau.with_precision(wp), wp);
    Complex e4(1L, 0L, wp), e6(1L, 0L, wp);
    Complex qn = q;
    for (i64 n = 1; n < 100000; ++n) {
        e4 = e4 + qn * Real(mpz_class(240 * sigma(n, 3)), wp);
        e6 = e6 - qn * Real(mpz_class(504 * sigma(n, 5)), wp);
        if (qn.abs().exponent() < -static_cast<long>(wp) - 40)
            break;
        qn = qn * q;
    }
    Complex e43 = e4 * e4 * e4;
    return (e43 * 1728L / (e43 - e6 * e6)).with_precision(p);
}

/* Hilbert class polynomial prod (X - j(tau_f)) over reduced forms of discriminant d */
inline etacm::ZPoly hilbert_class_polynomial(i64 d)
{
    auto forms = reduced_forms(d);
    double bits = 0;
    for (auto& f : forms)
        bits += M_PI * std::sqrt(static_cast<double>(-d)) / static_cast<double>(f[0]) / M_LN2 + 12;
    Precision p = static_cast<Precision>(bits) + 128;
    std::vector<Complex> poly{Complex(1L, 0L, p)};
    for (auto& f : forms) {
        Real re(-f[1], p);
        Real im = etacm::sqrt(Real(-d, p));
        Complex tau(re / (2 * f[0]), im / (2 * f[0]));
        Complex j = j_from_eisenstein(tau, p);
        std::vector<Complex> next(poly.size() + 1, Complex(p));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - poly[k] * j;
        }
        poly = next;
    }
    std::vector<mpz_class> c;
    for (auto& z : poly)
        c.push_back(z.re().round());
    return etacm::ZPoly(std::move(c));
}

} // namespace oracle
