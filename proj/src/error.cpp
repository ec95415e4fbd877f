#include "etacm/error.hpp"

namespace etacm {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_discriminant: return "invalid-discriminant";
    case ErrorKind::discriminant_mismatch: return "discriminant-mismatch";
    case ErrorKind::no_solution: return "no-solution";
    case ErrorKind::invalid_b: return "invalid-B";
    case ErrorKind::conditions_violated: return "conditions-violated";
    case ErrorKind::precision_exhausted: return "precision-exhausted";
    case ErrorKind::interpolation_singular: return "interpolation-singular";
    case ErrorKind::zero_constant_term: return "zero-constant-term";
    case ErrorKind::wrong_degree: return "wrong-degree";
    case ErrorKind::malformed_header: return "malformed-header";
    case ErrorKind::coefficient_parse_failure: return "coefficient-parse-failure";
    case ErrorKind::no_trace: return "no-trace";
    case ErrorKind::no_rational_j_root: return "no-rational-j-root";
    }
    return "unknown";
}

} // namespace etacm
