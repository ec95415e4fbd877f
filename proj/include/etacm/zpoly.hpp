#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace etacm {

/* Dense univariate polynomial over Z, coefficients lowest degree first. */
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    /* zero beyond the degree */
    mpz_class coeff(int k) const;
    const mpz_class& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    mpz_class eval(const mpz_class& x) const;

    /* "c_n ... c_0", decimal */
    std::string to_string_high_first() const;

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

ZPoly operator+(const ZPoly& f, const ZPoly& g);
ZPoly operator-(const ZPoly& f, const ZPoly& g);
ZPoly operator*(const ZPoly& f, const ZPoly& g);
ZPoly operator*(const ZPoly& f, const mpz_class& k);

struct ZPolyDivision {
    ZPoly quotient;
    ZPoly remainder;
};

/* division by a monic polynomial; exact over Z */
ZPolyDivision divide_by_monic(const ZPoly& f, const ZPoly& monic);

} // namespace etacm
