#pragma once

#include <charsum/curves.hpp>
#include <charsum/fp_core.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace charsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr std::int64_t kDefaultCeiling = 10'000;

/// Integer, "-1", or "n/m" (n times the inverse of m) reduced into F_p.
/// Throws Error(invalid_params) or Error(zero_argument) for m = 0 mod p.
Residue parse_field_element(const std::string &text, const FieldContext &ctx);

/// "eps", "phi", or an index k for chi_k. Throws Error(invalid_params).
Character parse_character(const std::string &text, const ContextPtr &ctx);

/// Prime ceiling: --unsafe-pmax if given, else $CHARSUM_PMAX, else 10^4.
std::int64_t resolve_ceiling(const char *env_pmax, const std::string &unsafe_pmax);

/// args excludes the program name. env_pmax is the value of CHARSUM_PMAX or
/// nullptr. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const char *env_pmax = nullptr);

} // namespace charsum::cli
