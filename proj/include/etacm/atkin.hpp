#pragma once

// Integer criteria for W_N and W_N^2 fixing the ideal class attached to an
// N-system, i.e. for the modular equation to acquire a multiple J-root.

#include "etacm/arith.hpp"

#include <optional>

namespace etacm {

/* u^2 - D v^2 = 4N and u - B v = 0 mod 2N */
struct Con1Solution {
    i64 u;
    i64 v;

    friend bool operator==(const Con1Solution&, const Con1Solution&) = default;
};

/* X^2 - D Y^2 = 4N^2, X - B Y = 0 mod 2N, ((X - B Y) / 2N)^2 = 1 mod Y, Y != 0 */
struct Wn2Solution {
    i64 x;
    i64 y;

    friend bool operator==(const Wn2Solution&, const Wn2Solution&) = default;
};

/*
 * First (u, v) by increasing |v| (v = 0 first, then v > 0 before v < 0,
 * u >= 0 before u < 0).  Throws Error(invalid_b) unless B^2 = D mod 4N,
 * Error(invalid_discriminant) unless D < 0.
 */
std::optional<Con1Solution> multiple_root_condition(i64 d, i64 n, i64 b);

/* same search over Y != 0 with Y^2 <= 4N^2 / |D| */
std::optional<Wn2Solution> wn_squared_fixes_class(i64 d, i64 n, i64 b);

struct MultipleRootCase {
    bool multiple = false;
    std::optional<Con1Solution> witness;
};

/* Error(conditions_violated) when the integrality conditions fail */
MultipleRootCase is_multiple_root_case(i64 d, int p1, int p2, i64 b);

} // namespace etacm
