#pragma once

// The worked example D = -56, N = 39, q = 3593 as a list of named checks.

#include "etacm/arith.hpp"

#include <string>
#include <vector>

namespace etacm {

struct ExampleCheck {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<ExampleCheck> reproduce_example(u64 seed = 0);

} // namespace etacm
