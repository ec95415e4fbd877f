#pragma once

// The modular polynomial Phi_{p1,p2}(X, J), the minimal polynomial of w^s
// over Q(J): monic of degree psi(N) in X and of degree s(p1-1)(p2-1)/12 in J.

#include "etacm/apfloat.hpp"
#include "etacm/ffield.hpp"
#include "etacm/sl2.hpp"
#include "etacm/zpoly.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace etacm {

struct ModularPolynomial {
    int p1 = 0;
    int p2 = 0;
    int s = 0;
    int deg_x = 0;
    int deg_j = 0;
    std::vector<std::vector<mpz_class>> coeffs; // [kX][kJ], (deg_x+1) x (deg_j+1)

    const mpz_class& coeff(int kx, int kj) const
    {
        return coeffs[static_cast<std::size_t>(kx)][static_cast<std::size_t>(kj)];
    }
    /* the coefficient of X^kx as a polynomial in J */
    ZPoly x_coefficient(int kx) const;
    /* the coefficient of J^kj as a polynomial in X */
    ZPoly j_coefficient(int kj) const;

    friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;
};

/* psi(N) = N prod_{p | N} (1 + 1/p) */
i64 psi(i64 n);

/*
 * One matrix per right coset of Gamma^0(N) in SL2(Z), indexed by the top row
 * read in P^1(Z/N).  N must be a product of two distinct odd primes.
 */
std::vector<Mat2> coset_representatives(i64 n);

struct ModularPolynomialOptions {
    Precision start = 256;
    int max_doublings = 6;
    int verification_samples = 3;
};

/*
 * Interpolates Phi from prod_gamma (X - w^s(gamma z_m)) at sample points.
 * Throws Error(invalid_argument) when deg_J > 4, Error(precision_exhausted)
 * or Error(interpolation_singular).
 */
ModularPolynomial compute_modular_polynomial(int p1, int p2, const ModularPolynomialOptions& options = {});

/* sum_kJ (sum_kX c(kX, kJ) wbar^kX) J^kJ over F_l; not made monic */
FpPolynomial evaluate_in_j_mod_l(const ModularPolynomial& phi, u64 wbar, u64 l);

/* Phi(X, jbar) over F_l as a polynomial in X */
FpPolynomial evaluate_in_x_mod_l(const ModularPolynomial& phi, u64 jbar, u64 l);

/* c1^2 - 4 c2 c0 for Phi = c2 J^2 + c1 J + c0; Error(wrong_degree) unless deg_J = 2 */
ZPoly discriminant_in_j(const ModularPolynomial& phi);

/* text format: header line then "<kX> <kJ> <coef>" lines */
std::string serialize(const ModularPolynomial& phi);
/* Error(malformed_header) or Error(coefficient_parse_failure) on bad input */
ModularPolynomial deserialize(std::string_view text);

/* the raw file text of Phi_{3,13} shipped with the library */
std::string_view embedded_modular_polynomial_text_3_13();
ModularPolynomial embedded_modular_polynomial_3_13();

/* Phi_{p1,p2}: the embedded table for (3, 13), otherwise computed once and cached */
const ModularPolynomial& modular_polynomial(int p1, int p2);

} // namespace etacm
