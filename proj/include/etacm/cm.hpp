#pragma once

// CM construction of an elliptic curve over F_q from the class polynomial of
// the double eta-quotient: trace, class-polynomial root, modular equation,
// j-invariant selection and order certification.

#include "etacm/arith.hpp"
#include "etacm/classpoly.hpp"
#include "etacm/modpoly.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace etacm {

/* 4q = t^2 - D v^2 with t > 0 */
struct TraceSolution {
    u64 q;
    i64 t;
    i64 v;

    friend bool operator==(const TraceSolution&, const TraceSolution&) = default;
};

/*
 * Smallest v > 0 first.  Exhaustive for q < 10^6 or |D| <= 4, Cornacchia
 * otherwise.  Throws Error(invalid_argument) unless q is an odd prime not
 * dividing D.
 */
std::optional<TraceSolution> find_trace(i64 d, u64 q);

/* y^2 = x^3 + a4 x + a6 over F_q, q > 3 */
struct EllipticCurve {
    u64 q;
    u64 a4;
    u64 a6;

    friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;
    friend auto operator<=>(const EllipticCurve&, const EllipticCurve&) = default;
};

/* 1728 * 4 a4^3 / (4 a4^3 + 27 a6^2); Error(invalid_argument) for a singular curve */
u64 j_invariant(const EllipticCurve& e);

/* k = j / (1728 - j), y^2 = x^3 + 3k x + 2k; j = 0 and 1728 special */
EllipticCurve curve_from_j(u64 jbar, u64 q);

/* the quadratic twist by the smallest non-residue */
EllipticCurve quadratic_twist(const EllipticCurve& e);

/* all twists with the same j: 2 in general, 4 for j = 1728, 6 for j = 0 */
std::vector<EllipticCurve> twists(const EllipticCurve& e);

/* exact group order; character sum for q <= 10^6, baby-step giant-step below 2^40 */
u64 point_count(const EllipticCurve& e, u64 seed = 0);

/* number of random points P (out of trials) with n P = O */
int random_order_checks(const EllipticCurve& e, u64 n, int trials, std::mt19937_64& rng);

struct OrderCertificate {
    EllipticCurve curve;
    u64 order;
    i64 trace;          // q + 1 - order
    int random_checks;  // passing points out of 20
    bool ambiguous = false;
};

struct CmResult {
    EllipticCurve curve;
    OrderCertificate certificate;
    bool used_shortcut = false;
    TraceSolution trace;
    i64 b;
    u64 wbar;
    u64 jbar;
    std::vector<std::string> notes;
};

struct CmOptions {
    std::optional<i64> b;
    u64 seed = 0;
    PrecisionPolicy precision;
};

/*
 * Rational roots J of Phi(wbar, J) mod q for each root wbar of H mod q,
 * concatenated over the roots of H in ascending order.
 */
std::vector<u64> candidate_j_roots(const ModularPolynomial& phi, const ZPoly& h, u64 q, u64 seed = 0);

/*
 * Throws Error(conditions_violated), Error(no_trace), Error(invalid_b),
 * Error(no_rational_j_root) or Error(precision_exhausted).
 */
CmResult construct_cm_curve(i64 d, int p1, int p2, u64 q, const CmOptions& options = {});

} // namespace etacm
