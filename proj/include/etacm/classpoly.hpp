#pragma once

// Class polynomials H_{B,N}(X) = prod_i (X - w^s(alpha_i)) of the double
// eta-quotient over an N-system, and the W_{p1} transform between them.

#include "etacm/apfloat.hpp"
#include "etacm/qforms.hpp"
#include "etacm/zpoly.hpp"

#include <vector>

namespace etacm {

struct PrecisionPolicy {
    Precision start = 256;
    Precision max = 65536;
    int max_doublings = 6;
};

struct ClassPolynomial {
    Discriminant d;
    int p1;
    int p2;
    int s;
    i64 b; // in [0, 2N)
    ZPoly poly;

    // diagnostics of the floating-point evaluation (zero for derived polynomials)
    Precision bits_used = 0;
    double max_residual = 0.0;

    int degree() const { return poly.degree(); }
};

/*
 * Condition 1 of the integrality criterion for p1 != p2:
 * (D|p1), (D|p2) != -1 and p1, p2 do not divide the conductor.
 * Equal primes and p = 2 are not supported and give false.
 */
bool check_integrality_conditions(i64 d, i64 p1, i64 p2);

/*
 * Starting precision: 64 + sum_i log2 |w^s(alpha_i)| estimate + 16 h(D).
 */
Precision initial_class_polynomial_precision(const NSystem& system, int p1, int p2);

/*
 * Throws Error(conditions_violated), Error(invalid_b) or
 * Error(precision_exhausted).
 */
ClassPolynomial compute_class_polynomial(i64 d, int p1, int p2, i64 b, const PrecisionPolicy& policy = {});

/* H_{B,N}(X) -> X^h / H(0) * H((p1/p2)^s / X), i.e. H_{B',N} with B' = B mod p1, -B mod p2 */
ClassPolynomial involution_transform(const ClassPolynomial& h);

/* the residue B' of the transform above */
i64 involution_partner(i64 d, int p1, int p2, i64 b);

/* number of distinct H_{B,N} over all B (one per pair B, -B) */
int count_distinct_class_polynomials(i64 d, int p1, int p2, const PrecisionPolicy& policy = {});

} // namespace etacm
