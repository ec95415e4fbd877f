#include "etacm/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace etacm {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

ZPoly::ZPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

void ZPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class ZPoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class ZPoly::eval(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string ZPoly::to_string_high_first() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!out.empty())
            out += ' ';
        out += it->get_str();
    }
    return out;
}

ZPoly operator+(const ZPoly& f, const ZPoly& g)
{
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1));
    for (int i = 0; i <= f.degree(); ++i)
        out[static_cast<std::size_t>(i)] += f.coeffs()[static_cast<std::size_t>(i)];
    for (int i = 0; i <= g.degree(); ++i)
        out[static_cast<std::size_t>(i)] += g.coeffs()[static_cast<std::size_t>(i)];
    return ZPoly(std::move(out));
}

ZPoly operator-(const ZPoly& f, const ZPoly& g)
{
    return f + g * mpz_class(-1);
}

ZPoly operator*(const ZPoly& f, const ZPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    std::vector<mpz_class> out(static_cast<std::size_t>(f.degree() + g.degree() + 1));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return ZPoly(std::move(out));
}

ZPoly operator*(const ZPoly& f, const mpz_class& k)
{
    std::vector<mpz_class> out = f.coeffs();
    for (auto& c : out)
        c *= k;
    return ZPoly(std::move(out));
}

ZPolyDivision divide_by_monic(const ZPoly& f, const ZPoly& monic)
{
    if (!monic.is_monic())
        throw std::invalid_argument("divisor must be monic");
    int n = monic.degree();
    std::vector<mpz_class> rem = f.coeffs();
    if (f.degree() < n)
        return {ZPoly(), f};
    std::vector<mpz_class> quo(static_cast<std::size_t>(f.degree() - n + 1));
    for (int k = f.degree(); k >= n; --k) {
        mpz_class c = rem[static_cast<std::size_t>(k)];
        quo[static_cast<std::size_t>(k - n)] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= n; ++i)
            rem[static_cast<std::size_t>(k - n + i)] -= c * monic.coeffs()[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(n));
    return {ZPoly(std::move(quo)), ZPoly(std::move(rem))};
}

} // namespace etacm
