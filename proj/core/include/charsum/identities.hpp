#pragma once

#include "charsum/charsums.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace charsum {

/// Outcome of one family of identities checked over a single prime.
struct IdentityTally {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t held = 0;
    /// Instances left out because a factor that must be inverted is zero.
    std::int64_t skipped = 0;
    double max_error = 0.0;

    bool ok() const noexcept { return checked == held; }
    void record(double error, double tolerance);
};

/// Checks the classical binomial-symbol identities over F_p for all
/// characters A, B, chi, all a in F_p^x and all x in F_p:
///
///   expand_1_plus_x    A(1+x) = delta(x) + p/(p-1) sum_chi {A choose chi} chi(x)
///   expand_1_minus_x   conj A(1-x) = delta(x) + p/(p-1) sum_chi {A chi choose chi} chi(x)
///   binom_symmetry     {A choose B} = {A choose A conj B}
///   binom_swap         {A choose B} = {B conj A choose B} B(-1)
///   binom_trivial      {A choose eps} = {A choose A} = -1/p + (p-1)/p delta(A)
///   binom_duplication  {B^2 chi^2 choose chi}
///                        = {phi B chi choose chi}{B chi choose B^2 chi}{phi choose phi B}^{-1} B chi(4)
///   binom_square       {A^2 choose A} = {phi A choose A} A(4), or (p-2)/p for A = eps
///   sum_a2_minus_x2    sum_x A(a^2 - x^2) = p A(4a^2) {conj A^2 choose conj A}
///                        = p A(a^2) {phi conj A choose conj A}, or p-2 for A = eps
///   sum_chi_x2_phi     sum_x chi(x^2) phi(1 - x^2) = p phi(-1) [{phi chi choose chi} + {chi choose phi chi}]
///   reflection         2F1(phi,phi;eps|x) = phi(-1) 2F1(phi,phi;eps|1-x), exact, x not in {0,1}
///
/// delta(x) in expand_1_plus_x is 1 at x = 0 and 0 elsewhere.
std::vector<IdentityTally> check_symbol_identities(const ContextPtr &ctx,
                                                   double tolerance = kDefaultTolerance);

} // namespace charsum
