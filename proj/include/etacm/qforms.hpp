#pragma once

// Positive definite binary quadratic forms [a, b, c] = a X^2 + b XY + c Y^2
// of negative discriminant, reduction, class enumeration and N-systems.

#include "etacm/apfloat.hpp"
#include "etacm/arith.hpp"
#include "etacm/sl2.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace etacm {

/*
 * Negative discriminant D = f^2 d_K with d_K fundamental and f the conductor.
 */
class Discriminant {
public:
    /* throws Error(invalid_discriminant) unless D < 0 and D = 0, 1 mod 4 */
    explicit Discriminant(i64 d);

    i64 value() const { return d_; }
    i64 fundamental() const { return fundamental_; }
    i64 conductor() const { return conductor_; }

    friend bool operator==(const Discriminant& x, const Discriminant& y) { return x.d_ == y.d_; }

private:
    i64 d_;
    i64 fundamental_;
    i64 conductor_;
};

bool is_fundamental_discriminant(i64 d);

struct QuadraticForm {
    i64 a = 1, b = 0, c = 0;

    i64 discriminant() const;
    bool is_primitive() const;
    bool is_reduced() const;
    /* a x^2 + b x y + c y^2 */
    i64 value(i64 x, i64 y) const;
    /* the root (-b + sqrt D) / (2a) in the upper half-plane */
    Complex root(Precision prec) const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

/*
 * g = f o M, i.e. g(X, Y) = f(aX + bY, cX + dY).  The roots satisfy
 * root(f) = M root(g).
 */
QuadraticForm transform(const QuadraticForm& f, const Mat2& m);

struct FormReduction {
    QuadraticForm form;
    Mat2 matrix; // form == transform(input, matrix)
};

/* Gauss reduction; input must be primitive, positive definite */
FormReduction reduce(const QuadraticForm& f);

/* all primitive reduced forms of discriminant D, sorted by (a, b) */
std::vector<QuadraticForm> enumerate_reduced_forms(const Discriminant& d);

/* h(D) */
i64 class_number(const Discriminant& d);

/* throws Error(discriminant_mismatch) when discriminants differ */
bool equivalent(const QuadraticForm& f, const QuadraticForm& g);

/* distinct odd primes p1 < p2 with N = p1 p2; throws Error(invalid_argument) otherwise */
std::pair<i64, i64> split_level(i64 n);

/*
 * All B in [0, 2N) with B^2 = D mod 4N, ascending.  Throws Error(no_solution)
 * when (D|p) = -1 for a prime p | N.
 */
std::vector<i64> b_candidates(const Discriminant& d, i64 n);

struct NSystem {
    Discriminant d;
    i64 n;
    i64 b; // residue in [0, 2N)
    std::vector<QuadraticForm> forms;
};

/*
 * An N-system whose first form is [1, B, (B^2 - D)/4]; every other form
 * has gcd(A, N) = 1, B_i = B mod 2N and N | C_i, one form per class.
 * Throws Error(invalid_b) if B^2 != D mod 4N.
 */
NSystem build_nsystem(const Discriminant& d, i64 n, i64 b);

/* re-checks the N-system conditions from scratch */
bool is_valid_nsystem(const NSystem& system);

} // namespace etacm
