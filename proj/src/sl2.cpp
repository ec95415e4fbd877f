#include "etacm/sl2.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace etacm {

namespace {

constexpr i128 kEntryLimit = i128(1) << 62;

i64 checked_entry(i128 v)
{
    if (v >= kEntryLimit || v <= -kEntryLimit)
        throw std::overflow_error("matrix entry overflow");
    return static_cast<i64>(v);
}

i64 iabs(i64 x) { return x < 0 ? -x : x; }

} // namespace

i64 Mat2::det() const
{
    return checked_entry(i128(a) * d - i128(b) * c);
}

i64 Mat2::max_entry() const
{
    return std::max({iabs(a), iabs(b), iabs(c), iabs(d)});
}

Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {checked_entry(i128(x.a) * y.a + i128(x.b) * y.c),
            checked_entry(i128(x.a) * y.b + i128(x.b) * y.d),
            checked_entry(i128(x.c) * y.a + i128(x.d) * y.c),
            checked_entry(i128(x.c) * y.b + i128(x.d) * y.d)};
}

Complex apply(const Mat2& m, const Complex& z)
{
    Complex num = z * m.a + m.b;
    Complex den = z * m.c + m.d;
    return num / den;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m)
{
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

} // namespace etacm
