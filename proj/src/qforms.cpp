#include "etacm/qforms.hpp"

#include "etacm/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

namespace etacm {

namespace {

i64 checked(i128 v)
{
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error("quadratic form coefficient overflow");
    return static_cast<i64>(v);
}

bool is_squarefree(u64 n)
{
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
    }
    return true;
}

bool valid_discriminant_residue(i64 d)
{
    i64 r = mod(d, 4);
    return r == 0 || r == 1;
}

} // namespace

bool is_fundamental_discriminant(i64 d)
{
    if (d == 0 || d == 1)
        return false;
    u64 ad = static_cast<u64>(d < 0 ? -d : d);
    if (mod(d, 4) == 1)
        return is_squarefree(ad);
    if (mod(d, 4) != 0)
        return false;
    i64 m = d / 4;
    i64 r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(ad / 4);
}

Discriminant::Discriminant(i64 d) : d_(d), fundamental_(d), conductor_(1)
{
    if (d >= 0 || !valid_discriminant_residue(d))
        throw Error(ErrorKind::invalid_discriminant, "D must be negative and 0 or 1 mod 4, got " + std::to_string(d));
    for (i64 f = static_cast<i64>(isqrt(static_cast<u64>(-d))); f >= 1; --f) {
        i64 f2 = f * f;
        if (d % f2 != 0)
            continue;
        i64 dk = d / f2;
        if (valid_discriminant_residue(dk) && is_fundamental_discriminant(dk)) {
            fundamental_ = dk;
            conductor_ = f;
            return;
        }
    }
    throw Error(ErrorKind::invalid_discriminant, "no fundamental part for " + std::to_string(d));
}

i64 QuadraticForm::discriminant() const
{
    return checked(i128(b) * b - i128(4) * a * c);
}

bool QuadraticForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

bool QuadraticForm::is_reduced() const
{
    i64 abs_b = b < 0 ? -b : b;
    if (!(abs_b <= a && a <= c))
        return false;
    if ((abs_b == a || a == c) && b < 0)
        return false;
    return true;
}

i64 QuadraticForm::value(i64 x, i64 y) const
{
    return checked(i128(a) * x * x + i128(b) * x * y + i128(c) * y * y);
}

Complex QuadraticForm::root(Precision prec) const
{
    Real re(-b, prec);
    Real im = sqrt(Real(-discriminant(), prec));
    return Complex(re / (2 * a), im / (2 * a));
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f)
{
    return os << '[' << f.a << ',' << f.b << ',' << f.c << ']';
}

QuadraticForm transform(const QuadraticForm& f, const Mat2& m)
{
    i128 a = f.a, b = f.b, c = f.c;
    return {checked(a * m.a * m.a + b * m.a * m.c + c * m.c * m.c),
            checked(2 * a * m.a * m.b + b * (i128(m.a) * m.d + i128(m.b) * m.c) + 2 * c * m.c * m.d),
            checked(a * m.b * m.b + b * m.b * m.d + c * m.d * m.d)};
}

FormReduction reduce(const QuadraticForm& f)
{
    if (f.a <= 0 || f.discriminant() >= 0)
        throw Error(ErrorKind::invalid_argument, "reduce needs a positive definite form");
    QuadraticForm g = f;
    Mat2 m = Mat2::identity();
    for (;;) {
        if (g.b <= -g.a || g.b > g.a) {
            i64 t = floor_div(g.a - g.b, 2 * g.a);
            Mat2 shift = Mat2::translation(t);
            g = transform(g, shift);
            m = m * shift;
        }
        if (g.a > g.c || (g.a == g.c && g.b < 0)) {
            g = transform(g, Mat2::inversion());
            m = m * Mat2::inversion();
            continue;
        }
        return {g, m};
    }
}

std::vector<QuadraticForm> enumerate_reduced_forms(const Discriminant& disc)
{
    const i64 d = disc.value();
    std::vector<QuadraticForm> out;
    for (i64 a = 1; 3 * a * a <= -d; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (mod(b - d, 2) != 0)
                continue;
            i128 num = i128(b) * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 c = static_cast<i64>(num / (4 * a));
            if (c < a || (c == a && b < 0))
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

i64 class_number(const Discriminant& d)
{
    return static_cast<i64>(enumerate_reduced_forms(d).size());
}

bool equivalent(const QuadraticForm& f, const QuadraticForm& g)
{
    if (f.discriminant() != g.discriminant())
        throw Error(ErrorKind::discriminant_mismatch, "forms have different discriminants");
    return reduce(f).form == reduce(g).form;
}

std::pair<i64, i64> split_level(i64 n)
{
    if (n < 15)
        throw Error(ErrorKind::invalid_argument, "N must be a product of two distinct odd primes");
    auto fac = factor(static_cast<u64>(n));
    if (fac.size() != 2 || fac[0].second != 1 || fac[1].second != 1 || fac[0].first == 2)
        throw Error(ErrorKind::invalid_argument, "N must be a product of two distinct odd primes");
    return {static_cast<i64>(fac[0].first), static_cast<i64>(fac[1].first)};
}

std::vector<i64> b_candidates(const Discriminant& disc, i64 n)
{
    auto [p1, p2] = split_level(n);
    const i64 d = disc.value();
    for (i64 p : {p1, p2}) {
        if (legendre(d, p) == -1)
            throw Error(ErrorKind::no_solution,
                        "(D|" + std::to_string(p) + ") = -1, no B with B^2 = D mod 4N");
    }
    std::vector<i64> out;
    const i64 four_n = 4 * n;
    for (i64 b = 0; b < 2 * n; ++b) {
        if ((i128(b) * b - d) % four_n == 0)
            out.push_back(b);
    }
    return out;
}

NSystem build_nsystem(const Discriminant& disc, i64 n, i64 b)
{
    split_level(n);
    const i64 d = disc.value();
    const i64 two_n = 2 * n;
    b = mod(b, two_n);
    if ((i128(b) * b - d) % (4 * n) != 0)
        throw Error(ErrorKind::invalid_b, "B^2 != D mod 4N for B = " + std::to_string(b));

    NSystem sys{disc, n, b, {}};
    sys.forms.push_back({1, b, checked((i128(b) * b - d) / 4)});

    for (const QuadraticForm& f : enumerate_reduced_forms(disc)) {
        if (f.a == 1)
            continue; // principal class, already represented

        // Smallest value f(x, y) coprime to N over primitive (x, y) in a growing box.
        std::optional<std::pair<i64, i64>> best;
        i64 best_value = 0;
        for (i64 bound = 4; !best; bound *= 2) {
            for (i64 x = -bound; x <= bound; ++x) {
                for (i64 y = 0; y <= bound; ++y) {
                    if (gcd(x, y) != 1)
                        continue;
                    i64 v = f.value(x, y);
                    if (gcd(v, n) != 1)
                        continue;
                    if (!best || v < best_value) {
                        best = {x, y};
                        best_value = v;
                    }
                }
            }
        }
        auto [x, y] = *best;
        auto e = extended_gcd(x, y); // x*e.x + y*e.y = 1
        Mat2 m{x, -e.y, y, e.x};
        QuadraticForm g = transform(f, m);

        // shift B into the residue class of b mod 2N
        i64 inv = *inverse_mod(g.a, n);
        i64 half_gap = (b - g.b) / 2; // same parity as D on both sides
        i64 t = mod(static_cast<i64>(i128(mod(half_gap, n)) * inv % n), n);
        g = transform(g, Mat2::translation(t));
        sys.forms.push_back(g);
    }
    return sys;
}

bool is_valid_nsystem(const NSystem& sys)
{
    const i64 d = sys.d.value();
    const i64 n = sys.n;
    std::set<QuadraticForm> classes;
    for (const QuadraticForm& f : sys.forms) {
        if (f.a <= 0 || f.discriminant() != d || !f.is_primitive())
            return false;
        if (gcd(f.a, n) != 1 || mod(f.b - sys.b, 2 * n) != 0 || mod(f.c, n) != 0)
            return false;
        classes.insert(reduce(f).form);
    }
    auto reduced = enumerate_reduced_forms(sys.d);
    return classes.size() == sys.forms.size()
        && std::set<QuadraticForm>(reduced.begin(), reduced.end()) == classes;
}

} // namespace etacm
