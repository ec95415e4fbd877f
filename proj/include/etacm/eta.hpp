#pragma once

// Arbitrary-precision evaluation of the Dedekind eta function, the modular
// invariant J and the double eta-quotient w_{p1,p2} on the upper half-plane.

#include "etacm/apfloat.hpp"
#include "etacm/sl2.hpp"

namespace etacm {

/* A complex number with strictly positive imaginary part. */
class UpperHalfPoint {
public:
    /* throws Error(invalid_argument) unless im(z) > 0 */
    explicit UpperHalfPoint(Complex z);

    const Complex& value() const { return z_; }
    Precision precision() const { return z_.precision(); }

private:
    Complex z_;
};

struct FundamentalDomainReduction {
    UpperHalfPoint point; // M z
    Mat2 matrix;          // determinant one
};

/*
 * Reduce z into the standard fundamental domain |re| <= 1/2, |z| >= 1 using
 * translations and z -> -1/z.  The reduction runs at the precision of z.
 */
FundamentalDomainReduction reduce_to_fundamental_domain(const UpperHalfPoint& z);

/*
 * Multiplier of eta(Mz) = eps(M) sqrt(cz+d) eta(z) for M normalised so that
 * c >= 0 and d > 0 when c = 0:
 *   eps(M) = (a/gamma) zeta_24^(ab + c(d(1-a^2)-a) + 3 gamma (a-1) + 3/2 lambda (a^2-1))
 * with c = gamma 2^lambda, gamma odd (gamma = lambda = 1 when c = 0).
 */
struct EtaMultiplierData {
    Mat2 matrix;        // normalised copy of the input
    i64 gamma = 1;
    int lambda = 1;
    int sign = 1;       // Jacobi symbol (a/gamma)
    int exponent24 = 0; // in [0, 24)

    Complex value(Precision prec) const;
};

/* throws Error(invalid_argument) unless det M = 1; negates M when needed */
EtaMultiplierData eta_multiplier(const Mat2& m);

Complex eta(const UpperHalfPoint& z, Precision prec);

/* J = E4^3 / eta^24, so that J(i) = 1728 */
Complex j_invariant(const UpperHalfPoint& z, Precision prec);

/* s = 24 / gcd(24, (p1-1)(p2-1)) */
int eta_quotient_exponent(int p1, int p2);

/* eta(z/p1) eta(z/p2) / (eta(z) eta(z/(p1 p2))), p1 != p2 odd primes */
Complex double_eta_quotient(const UpperHalfPoint& z, int p1, int p2, Precision prec);

/* double_eta_quotient(...)^s with s = eta_quotient_exponent(p1, p2) */
Complex w_pow_s(const UpperHalfPoint& z, int p1, int p2, Precision prec);

/* throws Error(invalid_argument) unless p1, p2 are distinct odd primes */
void require_distinct_odd_primes(i64 p1, i64 p2);

} // namespace etacm
