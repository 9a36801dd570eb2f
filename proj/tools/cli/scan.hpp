#pragma once

#include "report.hpp"

#include <charsum/fp_core.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace charsum::cli {

/// What each suite puts in a record:
///   thm1     Edwards{a}: brute count vs closed-form count
///   thm2     TwistedEdwards{a,d}: brute count vs closed-form count
///   cor-iso  Edwards{a} vs Legendre{a^4}, Weierstrass{a,b} vs TwistedEdwards{4a,4b},
///            both sides counted by brute force
///   prop1    p * 2F1(lambda) from the trace vs p * closed-form special value
///   lemmas   instances checked vs instances within tolerance, one record per identity
///   clausen  (1 + p - N)^2 vs p + p^2 phi(lambda + 1) 3F2, rounded
enum class Suite { thm1, thm2, cor_iso, prop1, lemmas, clausen };

std::string_view to_string(Suite suite) noexcept;
/// "all" expands to every suite; nullopt for an unknown name.
std::optional<std::vector<Suite>> parse_suite(std::string_view name);
/// Smallest prime at which the suite has anything to check.
std::int64_t suite_min_prime(Suite suite) noexcept;
double suite_default_tolerance(Suite suite) noexcept;

std::vector<VerificationRecord> suite_records(Suite suite, const ContextPtr &ctx, double tolerance);

struct ScanOptions {
    std::int64_t pmin = 3;
    std::int64_t pmax = 61;
    std::int64_t ceiling = 10'000;
    std::optional<double> tolerance;
    unsigned jobs = 1;
};

/// Primes in [max(pmin, suite_min_prime), pmax] over a pool of opts.jobs
/// workers; records come back in ascending p whatever the scheduling.
std::vector<VerificationRecord> run_scan(Suite suite, const ScanOptions &opts);

} // namespace charsum::cli
