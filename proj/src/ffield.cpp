#include "etacm/ffield.hpp"

#include "etacm/error.hpp"

#include <algorithm>
#include <ostream>

namespace etacm {

namespace {

void require_prime(u64 l)
{
    if (!is_prime(l) || l >> 63)
        throw Error(ErrorKind::invalid_argument, "modulus " + std::to_string(l) + " is not a prime below 2^63");
}

void require_same_field(u64 a, u64 b)
{
    if (a != b)
        throw Error(ErrorKind::invalid_argument, "mixed moduli");
}

u64 reduce_signed(i64 v, u64 l)
{
    return static_cast<u64>(mod(v, static_cast<i64>(l)));
}

u64 addm(u64 a, u64 b, u64 l)
{
    u64 s = a + b; // l < 2^63, no wrap
    return s >= l ? s - l : s;
}

u64 subm(u64 a, u64 b, u64 l)
{
    return a >= b ? a - b : a + (l - b);
}

u64 invm(u64 a, u64 l)
{
    if (a == 0)
        throw Error(ErrorKind::invalid_argument, "zero has no inverse");
    return powmod(a, l - 2, l);
}

} // namespace

FpElement::FpElement(i64 value, u64 l) : value_(0), l_(l)
{
    require_prime(l);
    value_ = reduce_signed(value, l);
}

FpElement FpElement::operator+(const FpElement& o) const
{
    require_same_field(l_, o.l_);
    return {addm(value_, o.value_, l_), l_, Unchecked{}};
}

FpElement FpElement::operator-(const FpElement& o) const
{
    require_same_field(l_, o.l_);
    return {subm(value_, o.value_, l_), l_, Unchecked{}};
}

FpElement FpElement::operator*(const FpElement& o) const
{
    require_same_field(l_, o.l_);
    return {mulmod(value_, o.value_, l_), l_, Unchecked{}};
}

FpElement FpElement::operator-() const
{
    return {subm(0, value_, l_), l_, Unchecked{}};
}

FpElement FpElement::inverse() const
{
    return {invm(value_, l_), l_, Unchecked{}};
}

FpElement FpElement::pow(u64 e) const
{
    return {powmod(value_, e, l_), l_, Unchecked{}};
}

std::ostream& operator<<(std::ostream& os, const FpElement& x)
{
    return os << x.value();
}

FpPolynomial::FpPolynomial(u64 l, std::vector<u64> coeffs) : l_(l), c_(std::move(coeffs))
{
    require_prime(l);
    for (u64& c : c_)
        c %= l;
    trim();
}

FpPolynomial::FpPolynomial(u64 l, std::vector<u64> coeffs, Unchecked) : l_(l), c_(std::move(coeffs))
{
    trim();
}

FpPolynomial FpPolynomial::from_signed(u64 l, const std::vector<i64>& coeffs)
{
    require_prime(l);
    std::vector<u64> c;
    for (i64 v : coeffs)
        c.push_back(reduce_signed(v, l));
    return {l, std::move(c), Unchecked{}};
}

FpPolynomial FpPolynomial::linear(u64 l, u64 root)
{
    require_prime(l);
    return {l, {subm(0, root % l, l), 1}, Unchecked{}};
}

void FpPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

u64 FpPolynomial::coeff(int k) const
{
    return k < 0 || k > degree() ? 0 : c_[static_cast<std::size_t>(k)];
}

u64 FpPolynomial::eval(u64 x) const
{
    x %= l_;
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = addm(mulmod(acc, x, l_), *it, l_);
    return acc;
}

FpPolynomial FpPolynomial::monic() const
{
    if (c_.empty())
        return *this;
    u64 inv = invm(c_.back(), l_);
    std::vector<u64> out = c_;
    for (u64& c : out)
        c = mulmod(c, inv, l_);
    return {l_, std::move(out), Unchecked{}};
}

FpPolynomial FpPolynomial::derivative() const
{
    std::vector<u64> out;
    for (std::size_t k = 1; k < c_.size(); ++k)
        out.push_back(mulmod(c_[k], k % l_, l_));
    return {l_, std::move(out), Unchecked{}};
}

FpPolynomial operator+(const FpPolynomial& f, const FpPolynomial& g)
{
    require_same_field(f.l_, g.l_);
    std::vector<u64> out(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = addm(i < f.c_.size() ? f.c_[i] : 0, i < g.c_.size() ? g.c_[i] : 0, f.l_);
    return {f.l_, std::move(out), FpPolynomial::Unchecked{}};
}

FpPolynomial operator-(const FpPolynomial& f, const FpPolynomial& g)
{
    require_same_field(f.l_, g.l_);
    std::vector<u64> out(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = subm(i < f.c_.size() ? f.c_[i] : 0, i < g.c_.size() ? g.c_[i] : 0, f.l_);
    return {f.l_, std::move(out), FpPolynomial::Unchecked{}};
}

FpPolynomial operator*(const FpPolynomial& f, const FpPolynomial& g)
{
    require_same_field(f.l_, g.l_);
    if (f.is_zero() || g.is_zero())
        return {f.l_, {}, FpPolynomial::Unchecked{}};
    std::vector<u64> out(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            out[i + j] = addm(out[i + j], mulmod(f.c_[i], g.c_[j], f.l_), f.l_);
    return {f.l_, std::move(out), FpPolynomial::Unchecked{}};
}

FpDivision divide(const FpPolynomial& f, const FpPolynomial& g)
{
    require_same_field(f.l_, g.l_);
    if (g.is_zero())
        throw Error(ErrorKind::invalid_argument, "polynomial division by zero");
    const u64 l = f.l_;
    const int n = g.degree();
    std::vector<u64> rem = f.c_;
    if (f.degree() < n)
        return {FpPolynomial(l, {}, FpPolynomial::Unchecked{}), f};
    u64 inv = invm(g.leading(), l);
    std::vector<u64> quo(static_cast<std::size_t>(f.degree() - n + 1), 0);
    for (int k = f.degree(); k >= n; --k) {
        u64 c = mulmod(rem[static_cast<std::size_t>(k)], inv, l);
        quo[static_cast<std::size_t>(k - n)] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= n; ++i) {
            auto idx = static_cast<std::size_t>(k - n + i);
            rem[idx] = subm(rem[idx], mulmod(c, g.c_[static_cast<std::size_t>(i)], l), l);
        }
    }
    rem.resize(static_cast<std::size_t>(n));
    return {FpPolynomial(l, std::move(quo), FpPolynomial::Unchecked{}),
            FpPolynomial(l, std::move(rem), FpPolynomial::Unchecked{})};
}

FpPolynomial gcd(const FpPolynomial& f, const FpPolynomial& g)
{
    FpPolynomial a = f, b = g;
    while (!b.is_zero()) {
        FpPolynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPolynomial powmod(const FpPolynomial& f, u64 e, const FpPolynomial& m)
{
    FpPolynomial result(m.l_, {1}, FpPolynomial::Unchecked{});
    result = divide(result, m).remainder;
    FpPolynomial base = divide(f, m).remainder;
    while (e) {
        if (e & 1)
            result = divide(result * base, m).remainder;
        e >>= 1;
        if (e)
            base = divide(base * base, m).remainder;
    }
    return result;
}

namespace {

/* g is monic, squarefree and splits into linear factors */
void split_linear(const FpPolynomial& g, std::mt19937_64& rng, std::vector<u64>& out)
{
    const u64 l = g.modulus();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        out.push_back(subm(0, g.coeff(0), l));
        return;
    }
    std::uniform_int_distribution<u64> pick(0, l - 1);
    const FpPolynomial one(l, {1});
    for (;;) {
        FpPolynomial shift(l, {pick(rng), 1});
        FpPolynomial h = gcd(g, powmod(shift, (l - 1) / 2, g) - one);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            split_linear(h, rng, out);
            split_linear(divide(g, h).quotient, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpRoot> roots_mod_l(const FpPolynomial& f, std::mt19937_64& rng)
{
    const u64 l = f.modulus();
    if (l == 2)
        throw Error(ErrorKind::invalid_argument, "roots_mod_l needs an odd prime");
    if (f.degree() < 1)
        throw Error(ErrorKind::invalid_argument, "roots_mod_l needs a polynomial of degree >= 1");

    FpPolynomial m = f.monic();
    FpPolynomial x(l, {0, 1});
    FpPolynomial frob = powmod(x, l, m) - x;
    FpPolynomial g = gcd(m, frob);

    std::vector<u64> distinct;
    split_linear(g, rng, distinct);
    std::sort(distinct.begin(), distinct.end());

    std::vector<FpRoot> out;
    for (u64 r : distinct) {
        FpPolynomial lin = FpPolynomial::linear(l, r);
        FpPolynomial rest = m;
        int mult = 0;
        for (;;) {
            FpDivision qr = divide(rest, lin);
            if (!qr.remainder.is_zero())
                break;
            rest = std::move(qr.quotient);
            ++mult;
        }
        out.push_back({r, mult});
    }
    return out;
}

std::vector<FpRoot> roots_mod_l(const FpPolynomial& f, u64 seed)
{
    std::mt19937_64 rng(seed);
    return roots_mod_l(f, rng);
}

bool has_multiple_root(const FpPolynomial& f)
{
    if (f.degree() < 1)
        throw Error(ErrorKind::invalid_argument, "has_multiple_root needs a polynomial of degree >= 1");
    return gcd(f, f.derivative()).degree() >= 1;
}

std::optional<FpElement> sqrt_mod_l(const FpElement& a)
{
    const u64 p = a.modulus();
    if (p == 2)
        return a;
    const u64 v = a.value();
    if (v == 0)
        return a;
    if (powmod(v, (p - 1) / 2, p) != 1)
        return std::nullopt;

    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;

    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, p);
    u64 t = powmod(v, q, p);
    u64 r = powmod(v, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 k = 0; k + i + 1 < m; ++k)
            b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return FpElement(static_cast<i64>(r), p);
}

} // namespace etacm
