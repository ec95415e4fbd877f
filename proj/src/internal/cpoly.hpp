#pragma once

// Complex polynomial helpers shared by the class and modular polynomial code.

#include "etacm/apfloat.hpp"

#include <vector>

namespace etacm::detail {

using CPoly = std::vector<Complex>; // lowest degree first

CPoly multiply(const CPoly& f, const CPoly& g);

/* prod (X - r) over all roots as a balanced product tree; roots non-empty */
CPoly product_of_linear_factors(const std::vector<Complex>& roots);

/* largest of |re - round(re)| and |im| */
double rounding_residual(const Complex& c);

} // namespace etacm::detail
