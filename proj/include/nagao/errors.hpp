#pragma once
#include <stdexcept>
#include <string>

namespace nagao {

// Error taxonomy shared by all modules.  The CLI maps kinds to exit codes:
// config -> 2, math-mode -> 3, identity violation -> 4.
enum class errc {
    config_error,
    zero_polynomial,
    degenerate_family,
    not_elliptic,
    bad_prime,
    consistency_failure,
    residual_char_too_small,
    unimplemented_type,
    non_integral_chi,
    missing_primes,
    ill_conditioned_fit,
    unavailable_convention,
    identity_violation,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    errc kind;
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline int exit_code_for(errc k) {
    switch (k) {
        case errc::config_error: return 2;
        case errc::identity_violation: return 4;
        default: return 3;
    }
}

} // namespace nagao
