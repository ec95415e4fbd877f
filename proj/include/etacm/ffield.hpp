#pragma once

// Prime fields F_l with l < 2^63 and dense polynomials over them.

#include "etacm/arith.hpp"

#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

namespace etacm {

class FpElement {
public:
    /* throws Error(invalid_argument) unless l is prime */
    FpElement(i64 value, u64 l);

    u64 value() const { return value_; }
    u64 modulus() const { return l_; }

    FpElement operator+(const FpElement& o) const;
    FpElement operator-(const FpElement& o) const;
    FpElement operator*(const FpElement& o) const;
    FpElement operator-() const;
    /* throws Error(invalid_argument) for zero */
    FpElement inverse() const;
    FpElement pow(u64 e) const;

    friend bool operator==(const FpElement&, const FpElement&) = default;

private:
    struct Unchecked {};
    FpElement(u64 value, u64 l, Unchecked) : value_(value), l_(l) {}

    u64 value_;
    u64 l_;
};

std::ostream& operator<<(std::ostream& os, const FpElement& x);

/* Polynomial over F_l, coefficients lowest degree first, trimmed. */
class FpPolynomial {
public:
    /* throws Error(invalid_argument) unless l is prime */
    explicit FpPolynomial(u64 l, std::vector<u64> coeffs = {});
    /* coefficients may be negative; they are reduced mod l */
    static FpPolynomial from_signed(u64 l, const std::vector<i64>& coeffs);
    /* (X - r) */
    static FpPolynomial linear(u64 l, u64 root);

    u64 modulus() const { return l_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 coeff(int k) const;
    u64 leading() const { return c_.back(); }

    u64 eval(u64 x) const;
    FpPolynomial monic() const;
    FpPolynomial derivative() const;

    friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

private:
    struct Unchecked {};
    FpPolynomial(u64 l, std::vector<u64> coeffs, Unchecked);
    void trim();

    u64 l_;
    std::vector<u64> c_;

    friend FpPolynomial operator+(const FpPolynomial&, const FpPolynomial&);
    friend FpPolynomial operator-(const FpPolynomial&, const FpPolynomial&);
    friend FpPolynomial operator*(const FpPolynomial&, const FpPolynomial&);
    friend struct FpDivision divide(const FpPolynomial&, const FpPolynomial&);
    friend FpPolynomial powmod(const FpPolynomial&, u64, const FpPolynomial&);
};

struct FpDivision {
    FpPolynomial quotient;
    FpPolynomial remainder;
};

FpPolynomial operator+(const FpPolynomial& f, const FpPolynomial& g);
FpPolynomial operator-(const FpPolynomial& f, const FpPolynomial& g);
FpPolynomial operator*(const FpPolynomial& f, const FpPolynomial& g);
/* throws Error(invalid_argument) on division by zero */
FpDivision divide(const FpPolynomial& f, const FpPolynomial& g);
/* monic gcd; zero only if both inputs are zero */
FpPolynomial gcd(const FpPolynomial& f, const FpPolynomial& g);
/* f^e mod m */
FpPolynomial powmod(const FpPolynomial& f, u64 e, const FpPolynomial& m);

struct FpRoot {
    u64 value;
    int multiplicity;

    friend bool operator==(const FpRoot&, const FpRoot&) = default;
};

/*
 * Roots in F_l with multiplicities, ascending by value.  Distinct roots come
 * from gcd(f, X^l - X) split by Cantor-Zassenhaus with the given generator.
 * Requires l odd and deg f >= 1.
 */
std::vector<FpRoot> roots_mod_l(const FpPolynomial& f, std::mt19937_64& rng);
std::vector<FpRoot> roots_mod_l(const FpPolynomial& f, u64 seed = 0);

/* deg gcd(f, f') >= 1 */
bool has_multiple_root(const FpPolynomial& f);

/* Tonelli-Shanks; nullopt for a non-residue */
std::optional<FpElement> sqrt_mod_l(const FpElement& a);

} // namespace etacm
