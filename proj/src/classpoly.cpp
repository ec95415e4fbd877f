#include "etacm/classpoly.hpp"

#include "etacm/error.hpp"
#include "etacm/eta.hpp"
#include "internal/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace etacm {

namespace {

struct Rounded {
    std::vector<mpz_class> coeffs;
    double residual;
};

Rounded round_coefficients(const detail::CPoly& poly)
{
    Rounded out{{}, 0.0};
    for (const Complex& c : poly) {
        out.residual = std::max(out.residual, detail::rounding_residual(c));
        out.coeffs.push_back(c.re().round());
    }
    return out;
}

} // namespace

bool check_integrality_conditions(i64 d, i64 p1, i64 p2)
{
    if (p1 == p2 || p1 < 3 || p2 < 3)
        return false;
    if (!is_prime(static_cast<u64>(p1)) || !is_prime(static_cast<u64>(p2)))
        return false;
    if (d >= 0 || (mod(d, 4) != 0 && mod(d, 4) != 1))
        return false;
    Discriminant disc(d);
    for (i64 p : {p1, p2}) {
        if (legendre(d, p) == -1 || disc.conductor() % p == 0)
            return false;
    }
    return true;
}

Precision initial_class_polynomial_precision(const NSystem& sys, int p1, int p2)
{
    const double n = static_cast<double>(sys.n);
    const double s = eta_quotient_exponent(p1, p2);
    const double scale = s * (p1 - 1) * (p2 - 1) / (24.0 * n);
    const double root_d = std::sqrt(static_cast<double>(-sys.d.value()));
    double bits = 0.0;
    for (const QuadraticForm& f : sys.forms)
        bits += M_PI * root_d / static_cast<double>(f.a) * scale / M_LN2;
    return 64 + static_cast<Precision>(std::ceil(bits)) + 16 * static_cast<Precision>(sys.forms.size());
}

ClassPolynomial compute_class_polynomial(i64 d, int p1, int p2, i64 b, const PrecisionPolicy& policy)
{
    if (!check_integrality_conditions(d, p1, p2))
        throw Error(ErrorKind::conditions_violated,
                    "integrality conditions fail for D=" + std::to_string(d) + " p1=" + std::to_string(p1)
                        + " p2=" + std::to_string(p2));
    Discriminant disc(d);
    const i64 n = static_cast<i64>(p1) * p2;
    NSystem sys = build_nsystem(disc, n, b);

    Precision prec = std::max(policy.start, initial_class_polynomial_precision(sys, p1, p2));
    for (int attempt = 0; attempt <= policy.max_doublings && prec <= policy.max; ++attempt, prec *= 2) {
        std::vector<Complex> roots;
        roots.reserve(sys.forms.size());
        double magnitude_bits = 0.0;
        for (const QuadraticForm& f : sys.forms) {
            UpperHalfPoint alpha(f.root(prec + 32));
            roots.push_back(w_pow_s(alpha, p1, p2, prec));
            magnitude_bits += std::max(0L, roots.back().abs().exponent());
        }
        // the coefficients may reach prod max(1, |r_i|); keep 64 bits below the point
        if (static_cast<double>(prec) < magnitude_bits + 64.0) {
            prec = static_cast<Precision>(magnitude_bits) + 64;
            prec /= 2; // undone by the loop increment
            continue;
        }
        Rounded r = round_coefficients(detail::product_of_linear_factors(roots));
        if (r.residual < 1e-3) {
            ClassPolynomial out{disc, p1, p2, eta_quotient_exponent(p1, p2), sys.b, ZPoly(std::move(r.coeffs))};
            out.bits_used = prec;
            out.max_residual = r.residual;
            return out;
        }
    }
    throw Error(ErrorKind::precision_exhausted, "class polynomial coefficients did not round to integers");
}

i64 involution_partner(i64 d, int p1, int p2, i64 b)
{
    const i64 n = static_cast<i64>(p1) * p2;
    for (i64 c = 0; c < 2 * n; ++c) {
        if (mod(c - b, p1) == 0 && mod(c + b, p2) == 0 && mod(c - d, 2) == 0)
            return c;
    }
    throw Error(ErrorKind::invalid_argument, "no partner residue");
}

ClassPolynomial involution_transform(const ClassPolynomial& h)
{
    const i64 d = h.d.value();
    if (legendre(d, h.p1) != 1 || legendre(d, h.p2) != 1)
        throw Error(ErrorKind::conditions_violated, "the transform needs (D|p1) = (D|p2) = 1");
    const mpz_class c0 = h.poly.coeff(0);
    if (c0 == 0)
        throw Error(ErrorKind::zero_constant_term, "H(0) = 0");

    int eps = legendre(h.p1, h.p2);
    if (h.s % 2 == 0)
        eps = 1;
    const int deg = h.poly.degree();
    std::vector<mpz_class> out(static_cast<std::size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
        mpz_class c = h.poly.coeff(k);
        if (eps < 0 && (k & 1))
            c = -c;
        if (c % c0 != 0)
            throw Error(ErrorKind::invalid_argument, "transform leaves Z[X]: H(0) does not divide the coefficients");
        out[static_cast<std::size_t>(deg - k)] = c / c0;
    }
    ClassPolynomial r = h;
    r.b = involution_partner(d, h.p1, h.p2, h.b);
    r.poly = ZPoly(std::move(out));
    r.bits_used = 0;
    r.max_residual = 0.0;
    return r;
}

int count_distinct_class_polynomials(i64 d, int p1, int p2, const PrecisionPolicy& policy)
{
    if (!check_integrality_conditions(d, p1, p2))
        throw Error(ErrorKind::conditions_violated, "integrality conditions fail");
    const i64 n = static_cast<i64>(p1) * p2;
    std::set<i64> reps;
    for (i64 b : b_candidates(Discriminant(d), n))
        reps.insert(std::min(b, mod(-b, 2 * n)));

    std::vector<ZPoly> distinct;
    for (i64 b : reps) {
        ZPoly poly = compute_class_polynomial(d, p1, p2, b, policy).poly;
        if (std::find(distinct.begin(), distinct.end(), poly) == distinct.end())
            distinct.push_back(std::move(poly));
    }
    int count = static_cast<int>(distinct.size());
    int l1 = legendre(d, p1), l2 = legendre(d, p2);
    if (l1 == 1 && l2 == 1 && (count < 1 || count > 2))
        throw std::logic_error("more than two class polynomials for split primes");
    if ((l1 == 0) != (l2 == 0) && count != 1)
        throw std::logic_error("expected a single class polynomial with one ramified prime");
    return count;
}

} // namespace etacm
