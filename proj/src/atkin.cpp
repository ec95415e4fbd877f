#include "etacm/atkin.hpp"

#include "etacm/classpoly.hpp"
#include "etacm/error.hpp"

#include <limits>

namespace etacm {

namespace {

void require_inputs(i64 d, i64 n, i64 b)
{
    if (d >= 0)
        throw Error(ErrorKind::invalid_discriminant, "D must be negative");
    if (n <= 0)
        throw Error(ErrorKind::invalid_argument, "N must be positive");
    if ((i128(b) * b - d) % (i128(4) * n) != 0)
        throw Error(ErrorKind::invalid_b, "B^2 != D mod 4N for B = " + std::to_string(b));
}

/* 0, 1, -1, 2, -2, ... while |D| k^2 <= bound */
template <typename Visit>
auto search_signed(i64 d, i128 bound, bool skip_zero, Visit visit) -> decltype(visit(i64{}))
{
    const i128 ad = -i128(d);
    for (i64 k = skip_zero ? 1 : 0; ad * k * k <= bound; ++k) {
        if (auto hit = visit(k))
            return hit;
        if (k != 0) {
            if (auto hit = visit(-k))
                return hit;
        }
    }
    return std::nullopt;
}

/* u >= 0 then -u for u^2 = value */
template <typename Test>
auto both_roots(i128 value, Test test) -> decltype(test(i64{}))
{
    if (value < 0 || value > std::numeric_limits<i64>::max())
        return std::nullopt;
    auto r = exact_sqrt(static_cast<i64>(value));
    if (!r)
        return std::nullopt;
    if (auto hit = test(*r))
        return hit;
    if (*r != 0)
        return test(-*r);
    return std::nullopt;
}

} // namespace

std::optional<Con1Solution> multiple_root_condition(i64 d, i64 n, i64 b)
{
    require_inputs(d, n, b);
    const i128 four_n = i128(4) * n;
    return search_signed(d, four_n, false, [&](i64 v) {
        return both_roots(four_n + i128(d) * v * v, [&](i64 u) -> std::optional<Con1Solution> {
            if ((i128(u) - i128(b) * v) % (2 * n) == 0)
                return Con1Solution{u, v};
            return std::nullopt;
        });
    });
}

std::optional<Wn2Solution> wn_squared_fixes_class(i64 d, i64 n, i64 b)
{
    require_inputs(d, n, b);
    const i128 four_n2 = i128(4) * n * n;
    return search_signed(d, four_n2, true, [&](i64 y) {
        return both_roots(four_n2 + i128(d) * y * y, [&](i64 x) -> std::optional<Wn2Solution> {
            i128 diff = i128(x) - i128(b) * y;
            if (diff % (2 * n) != 0)
                return std::nullopt;
            i128 k = diff / (2 * n);
            i128 ay = y < 0 ? -i128(y) : i128(y);
            if ((k * k - 1) % ay != 0)
                return std::nullopt;
            return Wn2Solution{x, y};
        });
    });
}

MultipleRootCase is_multiple_root_case(i64 d, int p1, int p2, i64 b)
{
    if (!check_integrality_conditions(d, p1, p2))
        throw Error(ErrorKind::conditions_violated, "integrality conditions fail");
    auto sol = multiple_root_condition(d, static_cast<i64>(p1) * p2, b);
    return {sol.has_value(), sol};
}

} // namespace etacm
