#include "internal/cpoly.hpp"

#include <algorithm>
#include <cmath>

namespace etacm::detail {

namespace {

CPoly product_tree(const std::vector<Complex>& roots, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return {-roots[lo], Complex(1L, 0L, roots[lo].precision())};
    std::size_t mid = lo + (hi - lo) / 2;
    return multiply(product_tree(roots, lo, mid), product_tree(roots, mid, hi));
}

} // namespace

CPoly multiply(const CPoly& f, const CPoly& g)
{
    CPoly out(f.size() + g.size() - 1, Complex(f.front().precision()));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] += f[i] * g[j];
    return out;
}

CPoly product_of_linear_factors(const std::vector<Complex>& roots)
{
    return product_tree(roots, 0, roots.size());
}

double rounding_residual(const Complex& c)
{
    Real k(c.re().round(), c.precision());
    double re_err = std::fabs((c.re() - k).to_double());
    double im_err = std::fabs(c.im().to_double());
    return std::max(re_err, im_err);
}

} // namespace etacm::detail
