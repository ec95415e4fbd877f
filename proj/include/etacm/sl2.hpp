#pragma once

#include "etacm/apfloat.hpp"
#include "etacm/arith.hpp"

#include <iosfwd>

namespace etacm {

/* 2x2 integer matrix [[a, b], [c, d]] acting by Moebius transformation. */
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
    static constexpr Mat2 translation(i64 n) { return {1, n, 0, 1}; }
    static constexpr Mat2 inversion() { return {0, -1, 1, 0}; }

    i64 det() const;
    Mat2 negated() const { return {-a, -b, -c, -d}; }
    /* inverse of a determinant-one matrix */
    Mat2 inverse() const { return {d, -b, -c, a}; }
    i64 max_entry() const;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/* throws std::overflow_error when an entry leaves the 62-bit range */
Mat2 operator*(const Mat2& x, const Mat2& y);

/* (a z + b) / (c z + d) */
Complex apply(const Mat2& m, const Complex& z);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

} // namespace etacm
