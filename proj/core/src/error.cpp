#include "charsum/error.hpp"

namespace charsum {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::even_prime: return "EvenPrime";
    case Errc::prime_too_large: return "PrimeTooLarge";
    case Errc::non_residue: return "NonResidue";
    case Errc::no_representation: return "NoRepresentation";
    case Errc::zero_argument: return "ZeroArgument";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::degenerate_lambda: return "DegenerateLambda";
    case Errc::bad_lambda: return "BadLambda";
    case Errc::invalid_model: return "InvalidModel";
    case Errc::unsupported_model: return "UnsupportedModel";
    case Errc::exceptional_addition: return "ExceptionalAddition";
    case Errc::not_on_curve: return "NotOnCurve";
    case Errc::singular_curve: return "SingularCurve";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code)
{
}

} // namespace charsum
