#include "etacm/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace etacm {

i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

i64 gcd(i64 a, i64 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

ExtendedGcd extended_gcd(i64 a, i64 b)
{
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::optional<i64> inverse_mod(i64 a, i64 m)
{
    auto e = extended_gcd(mod(a, m), m);
    if (e.g != 1)
        return std::nullopt;
    return mod(e.x, m);
}

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::optional<i64> exact_sqrt(i64 n)
{
    if (n < 0)
        return std::nullopt;
    u64 r = isqrt(static_cast<u64>(n));
    if (static_cast<u128>(r) * r != static_cast<u64>(n))
        return std::nullopt;
    return static_cast<i64>(r);
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1)
            result = mulmod(result, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return result;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

int jacobi(i64 a, i64 n)
{
    if (n <= 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r = n & 7;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int legendre(i64 a, i64 p)
{
    if (p < 3 || (p & 1) == 0)
        throw std::invalid_argument("legendre: p must be an odd prime");
    u64 r = static_cast<u64>(mod(a, p));
    if (r == 0)
        return 0;
    u64 e = powmod(r, static_cast<u64>(p - 1) / 2, static_cast<u64>(p));
    return e == 1 ? 1 : -1;
}

std::vector<std::pair<u64, int>> factor(u64 n)
{
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k)
            out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

} // namespace etacm
