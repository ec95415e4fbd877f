#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace etacm {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/* floor division and non-negative remainder for signed integers */
i64 floor_div(i64 a, i64 b);
i64 mod(i64 a, i64 m);

i64 gcd(i64 a, i64 b);

struct ExtendedGcd {
    i64 g; // >= 0
    i64 x;
    i64 y; // a*x + b*y == g
};
ExtendedGcd extended_gcd(i64 a, i64 b);

/* inverse of a modulo m, m > 1; nullopt when gcd(a, m) != 1 */
std::optional<i64> inverse_mod(i64 a, i64 m);

/* floor(sqrt(n)) for n >= 0 */
u64 isqrt(u64 n);
std::optional<i64> exact_sqrt(i64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/* deterministic Miller-Rabin for the full 64-bit range */
bool is_prime(u64 n);

/* Jacobi symbol (a/n) for odd n > 0 */
int jacobi(i64 a, i64 n);

/* Legendre symbol (a/p) for an odd prime p via Euler's criterion; 0 when p | a */
int legendre(i64 a, i64 p);

/* trial-division factorisation, ascending primes with exponents */
std::vector<std::pair<u64, int>> factor(u64 n);

} // namespace etacm
