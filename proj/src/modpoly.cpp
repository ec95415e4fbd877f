#include "etacm/modpoly.hpp"

#include "etacm/error.hpp"
#include "etacm/eta.hpp"
#include "etacm/qforms.hpp"
#include "internal/cpoly.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace etacm {

namespace {

constexpr int kMaxDegJ = 4;
constexpr int kSampleStrides[] = {17, 19, 23};

/* canonical representative of (x : y) in P^1(Z/N) under scaling by units */
std::pair<i64, i64> projective_key(i64 x, i64 y, i64 n)
{
    std::pair<i64, i64> best{n, n};
    for (i64 u = 1; u < n; ++u) {
        if (gcd(u, n) != 1)
            continue;
        best = std::min(best, {x * u % n, y * u % n});
    }
    return best;
}

Mat2 complete_top_row(i64 x, i64 y, i64 n)
{
    i64 xl = x == 0 ? n : x;
    i64 yl = y;
    while (gcd(xl, yl) != 1)
        yl += n;
    ExtendedGcd e = extended_gcd(xl, yl);
    return {xl, yl, -e.y, e.x};
}

Complex sample_point(int m, int stride, Precision prec)
{
    // m / stride + i (1.1 + m / 7)
    return Complex(Real(mpq_class(m, stride), prec), Real(mpq_class(77 + 10 * m, 70), prec));
}

struct Sample {
    Complex j;
    detail::CPoly product; // prod_gamma (X - w^s(gamma z))
};

Sample evaluate_sample(const Complex& z, const std::vector<Mat2>& reps, int p1, int p2, Precision prec)
{
    Precision zp = prec + 64;
    Complex zz = z.with_precision(zp);
    std::vector<Complex> conj;
    conj.reserve(reps.size());
    for (const Mat2& g : reps)
        conj.push_back(w_pow_s(UpperHalfPoint(apply(g, zz)), p1, p2, prec));
    return {j_invariant(UpperHalfPoint(zz), prec), detail::product_of_linear_factors(conj)};
}

/* solves sum_k c_k x_m^k = y_m for m = 0..n-1 by Gaussian elimination */
std::vector<Complex> solve_vandermonde(const std::vector<Complex>& xs, const std::vector<Complex>& ys)
{
    const std::size_t n = xs.size();
    const Precision p = xs.front().precision();
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n + 1, Complex(p)));
    for (std::size_t m = 0; m < n; ++m) {
        Complex pw(1L, 0L, p);
        for (std::size_t k = 0; k < n; ++k) {
            a[m][k] = pw;
            pw *= xs[m];
        }
        a[m][n] = ys[m];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].norm() > a[piv][col].norm())
                piv = r;
        }
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            Complex f = a[r][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k)
                a[r][k] -= f * a[col][k];
        }
    }
    std::vector<Complex> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(a[k][n] / a[k][k]);
    return out;
}

bool well_separated(const std::vector<Complex>& js)
{
    for (std::size_t a = 0; a < js.size(); ++a) {
        for (std::size_t b = a + 1; b < js.size(); ++b) {
            Real gap = (js[a] - js[b]).abs();
            Real scale = js[a].abs() + js[b].abs() + Real(1L, gap.precision());
            if (gap < ldexp(scale, -20))
                return false;
        }
    }
    return true;
}

/* one attempt at a fixed precision; nullopt when rounding or verification fails */
std::optional<ModularPolynomial> attempt(ModularPolynomial shape, const std::vector<Mat2>& reps, int stride,
                                         int extra, Precision prec)
{
    const int nj = shape.deg_j + 1;
    const int total = nj + extra;
    std::vector<std::future<Sample>> jobs;
    for (int m = 0; m < total; ++m) {
        jobs.push_back(std::async(std::launch::async, [&, m] {
            return evaluate_sample(sample_point(m, stride, prec + 64), reps, shape.p1, shape.p2, prec);
        }));
    }
    std::vector<Sample> samples;
    for (auto& job : jobs)
        samples.push_back(job.get());

    std::vector<Complex> js;
    for (int m = 0; m < nj; ++m)
        js.push_back(samples[static_cast<std::size_t>(m)].j);
    if (!well_separated(js))
        throw Error(ErrorKind::interpolation_singular, "sample J-values too close");

    shape.coeffs.assign(static_cast<std::size_t>(shape.deg_x + 1), std::vector<mpz_class>(static_cast<std::size_t>(nj)));
    for (int kx = 0; kx <= shape.deg_x; ++kx) {
        std::vector<Complex> ys;
        for (int m = 0; m < nj; ++m)
            ys.push_back(samples[static_cast<std::size_t>(m)].product[static_cast<std::size_t>(kx)]);
        std::vector<Complex> c = solve_vandermonde(js, ys);
        for (int kj = 0; kj < nj; ++kj) {
            const Complex& v = c[static_cast<std::size_t>(kj)];
            if (detail::rounding_residual(v) >= 0.25)
                return std::nullopt;
            shape.coeffs[static_cast<std::size_t>(kx)][static_cast<std::size_t>(kj)] = v.re().round();
        }
    }

    // the remaining samples must satisfy the rounded polynomial
    for (int m = nj; m < total; ++m) {
        const Sample& smp = samples[static_cast<std::size_t>(m)];
        for (int kx = 0; kx <= shape.deg_x; ++kx) {
            Complex acc(prec);
            Complex pw(1L, 0L, prec);
            for (int kj = 0; kj < nj; ++kj) {
                acc += pw * Real(shape.coeff(kx, kj), prec);
                pw *= smp.j;
            }
            const Complex& target = smp.product[static_cast<std::size_t>(kx)];
            Real err = (acc - target).abs();
            Real tol = ldexp(target.abs(), -static_cast<long>(prec) + 24);
            if (err > Real(0.25, prec) && err > tol)
                return std::nullopt;
        }
    }
    return shape;
}

i64 to_i64(const std::string& s)
{
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument(s);
    return v;
}

} // namespace

ZPoly ModularPolynomial::x_coefficient(int kx) const
{
    return ZPoly(coeffs[static_cast<std::size_t>(kx)]);
}

ZPoly ModularPolynomial::j_coefficient(int kj) const
{
    std::vector<mpz_class> c;
    for (const auto& row : coeffs)
        c.push_back(row[static_cast<std::size_t>(kj)]);
    return ZPoly(std::move(c));
}

i64 psi(i64 n)
{
    i64 out = n;
    for (auto [p, e] : factor(static_cast<u64>(n)))
        out = out / static_cast<i64>(p) * static_cast<i64>(p + 1);
    return out;
}

std::vector<Mat2> coset_representatives(i64 n)
{
    split_level(n);
    std::set<std::pair<i64, i64>> keys;
    for (i64 x = 0; x < n; ++x) {
        for (i64 y = 0; y < n; ++y) {
            if (gcd(gcd(x, y), n) == 1)
                keys.insert(projective_key(x, y, n));
        }
    }
    std::vector<Mat2> out;
    for (auto [x, y] : keys)
        out.push_back(complete_top_row(x, y, n));
    return out;
}

ModularPolynomial compute_modular_polynomial(int p1, int p2, const ModularPolynomialOptions& options)
{
    require_distinct_odd_primes(p1, p2);
    if (p1 > p2)
        std::swap(p1, p2);
    ModularPolynomial shape;
    shape.p1 = p1;
    shape.p2 = p2;
    shape.s = eta_quotient_exponent(p1, p2);
    const i64 n = static_cast<i64>(p1) * p2;
    shape.deg_x = static_cast<int>(psi(n));
    shape.deg_j = static_cast<int>(static_cast<i64>(shape.s) * (p1 - 1) * (p2 - 1) / 12);
    if (shape.deg_j > kMaxDegJ)
        throw Error(ErrorKind::invalid_argument,
                    "J-degree " + std::to_string(shape.deg_j) + " is beyond the supported range");

    const std::vector<Mat2> reps = coset_representatives(n);
    Precision prec = options.start;
    for (int doubling = 0; doubling <= options.max_doublings; ++doubling, prec *= 2) {
        for (std::size_t si = 0; si < std::size(kSampleStrides); ++si) {
            try {
                if (auto phi = attempt(shape, reps, kSampleStrides[si], options.verification_samples, prec))
                    return *phi;
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::interpolation_singular || si + 1 == std::size(kSampleStrides))
                    throw;
            }
        }
    }
    throw Error(ErrorKind::precision_exhausted, "modular polynomial coefficients did not round to integers");
}

FpPolynomial evaluate_in_j_mod_l(const ModularPolynomial& phi, u64 wbar, u64 l)
{
    std::vector<u64> out(static_cast<std::size_t>(phi.deg_j + 1), 0);
    FpPolynomial check(l); // validates l
    wbar %= l;
    for (int kj = 0; kj <= phi.deg_j; ++kj) {
        u64 acc = 0;
        for (int kx = phi.deg_x; kx >= 0; --kx) {
            u64 c = mpz_fdiv_ui(phi.coeff(kx, kj).get_mpz_t(), l);
            acc = (mulmod(acc, wbar, l) + c) % l;
        }
        out[static_cast<std::size_t>(kj)] = acc;
    }
    return FpPolynomial(l, std::move(out));
}

FpPolynomial evaluate_in_x_mod_l(const ModularPolynomial& phi, u64 jbar, u64 l)
{
    std::vector<u64> out(static_cast<std::size_t>(phi.deg_x + 1), 0);
    FpPolynomial check(l);
    jbar %= l;
    for (int kx = 0; kx <= phi.deg_x; ++kx) {
        u64 acc = 0;
        for (int kj = phi.deg_j; kj >= 0; --kj) {
            u64 c = mpz_fdiv_ui(phi.coeff(kx, kj).get_mpz_t(), l);
            acc = (mulmod(acc, jbar, l) + c) % l;
        }
        out[static_cast<std::size_t>(kx)] = acc;
    }
    return FpPolynomial(l, std::move(out));
}

ZPoly discriminant_in_j(const ModularPolynomial& phi)
{
    if (phi.deg_j != 2)
        throw Error(ErrorKind::wrong_degree, "discriminant in J needs J-degree 2");
    ZPoly c0 = phi.j_coefficient(0), c1 = phi.j_coefficient(1), c2 = phi.j_coefficient(2);
    return c1 * c1 - c2 * c0 * mpz_class(4);
}

std::string serialize(const ModularPolynomial& phi)
{
    std::ostringstream os;
    os << "MODPOLY v1 p1=" << phi.p1 << " p2=" << phi.p2 << " s=" << phi.s << " degX=" << phi.deg_x
       << " degJ=" << phi.deg_j << '\n';
    for (int kx = phi.deg_x; kx >= 0; --kx) {
        for (int kj = 0; kj <= phi.deg_j; ++kj) {
            const mpz_class& c = phi.coeff(kx, kj);
            if (c != 0)
                os << kx << ' ' << kj << ' ' << c.get_str() << '\n';
        }
    }
    return os.str();
}

ModularPolynomial deserialize(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorKind::malformed_header, "empty input");

    ModularPolynomial phi;
    {
        std::istringstream hs(line);
        std::string magic, version, rest;
        hs >> magic >> version;
        if (magic != "MODPOLY" || version != "v1")
            throw Error(ErrorKind::malformed_header, "expected 'MODPOLY v1'");
        const char* keys[] = {"p1=", "p2=", "s=", "degX=", "degJ="};
        int* slots[] = {&phi.p1, &phi.p2, &phi.s, &phi.deg_x, &phi.deg_j};
        for (int k = 0; k < 5; ++k) {
            std::string tok;
            if (!(hs >> tok) || tok.rfind(keys[k], 0) != 0)
                throw Error(ErrorKind::malformed_header, std::string("missing field ") + keys[k]);
            try {
                *slots[k] = static_cast<int>(to_i64(tok.substr(std::string(keys[k]).size())));
            } catch (const std::exception&) {
                throw Error(ErrorKind::malformed_header, "bad value in '" + tok + "'");
            }
        }
        if (hs >> rest)
            throw Error(ErrorKind::malformed_header, "trailing header field '" + rest + "'");
    }
    try {
        require_distinct_odd_primes(phi.p1, phi.p2);
    } catch (const Error&) {
        throw Error(ErrorKind::malformed_header, "p1, p2 must be distinct odd primes");
    }
    const i64 n = static_cast<i64>(phi.p1) * phi.p2;
    if (phi.s != eta_quotient_exponent(phi.p1, phi.p2) || phi.deg_x != psi(n)
        || phi.deg_j != static_cast<i64>(phi.s) * (phi.p1 - 1) * (phi.p2 - 1) / 12)
        throw Error(ErrorKind::malformed_header, "s, degX or degJ inconsistent with p1, p2");

    phi.coeffs.assign(static_cast<std::size_t>(phi.deg_x + 1),
                      std::vector<mpz_class>(static_cast<std::size_t>(phi.deg_j + 1)));
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string skx, skj, scoef, extra;
        if (!(ls >> skx >> skj >> scoef) || (ls >> extra))
            throw Error(ErrorKind::coefficient_parse_failure, "line " + std::to_string(lineno) + ": expected 3 fields");
        i64 kx, kj;
        mpz_class c;
        try {
            kx = to_i64(skx);
            kj = to_i64(skj);
        } catch (const std::exception&) {
            throw Error(ErrorKind::coefficient_parse_failure, "line " + std::to_string(lineno) + ": bad exponent");
        }
        if (c.set_str(scoef, 10) != 0)
            throw Error(ErrorKind::coefficient_parse_failure, "line " + std::to_string(lineno) + ": bad coefficient");
        if (kx < 0 || kx > phi.deg_x || kj < 0 || kj > phi.deg_j)
            throw Error(ErrorKind::coefficient_parse_failure, "line " + std::to_string(lineno) + ": exponent out of range");
        phi.coeffs[static_cast<std::size_t>(kx)][static_cast<std::size_t>(kj)] = c;
    }
    if (phi.coeff(phi.deg_x, 0) != 1)
        throw Error(ErrorKind::coefficient_parse_failure, "polynomial is not monic in X");
    return phi;
}

ModularPolynomial embedded_modular_polynomial_3_13()
{
    return deserialize(embedded_modular_polynomial_text_3_13());
}

const ModularPolynomial& modular_polynomial(int p1, int p2)
{
    static std::mutex lock;
    static std::map<std::pair<int, int>, ModularPolynomial> cache;
    if (p1 > p2)
        std::swap(p1, p2);
    std::lock_guard guard(lock);
    auto it = cache.find({p1, p2});
    if (it == cache.end()) {
        ModularPolynomial phi = p1 == 3 && p2 == 13 ? embedded_modular_polynomial_3_13()
                                                    : compute_modular_polynomial(p1, p2);
        it = cache.emplace(std::pair{p1, p2}, std::move(phi)).first;
    }
    return it->second;
}

} // namespace etacm
