#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charsum {

enum class Errc {
    not_prime,
    even_prime,
    prime_too_large,
    non_residue,
    no_representation,
    zero_argument,
    context_mismatch,
    invalid_params,
    degenerate_lambda,
    bad_lambda,
    invalid_model,
    unsupported_model,
    exceptional_addition,
    not_on_curve,
    singular_curve,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the violated condition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace charsum
