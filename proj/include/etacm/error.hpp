#pragma once

#include <stdexcept>
#include <string>

namespace etacm {

enum class ErrorKind {
    invalid_argument,
    invalid_discriminant,
    discriminant_mismatch,
    no_solution,
    invalid_b,
    conditions_violated,
    precision_exhausted,
    interpolation_singular,
    zero_constant_term,
    wrong_degree,
    malformed_header,
    coefficient_parse_failure,
    no_trace,
    no_rational_j_root,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace etacm
