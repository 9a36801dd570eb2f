#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace charsum {

/// Canonical representative of an element of F_p, always in [0, p).
using Residue = std::int64_t;

/// Upper bound on p accepted by build_field_context unless overridden. The
/// context stores O(p) tables, so this is a memory guard rather than an
/// arithmetic limit (products stay below 2^62 for any p < 2^31).
inline constexpr std::int64_t kDefaultPrimeBound = 10'000'000;
inline constexpr std::int64_t kArithmeticPrimeBound = std::int64_t{1} << 31;

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

/// Immutable description of F_p: the prime, its least primitive root g and
/// the discrete-log / exponent tables against g.
///
/// Also holds the powers of zeta = exp(2 pi i / (p-1)), which is the common
/// target of every multiplicative character value.
class FieldContext {
public:
    std::int64_t p() const noexcept { return p_; }
    /// Order of the multiplicative group, p - 1.
    std::int64_t group_order() const noexcept { return p_ - 1; }
    Residue generator() const noexcept { return g_; }

    Residue reduce(std::int64_t v) const noexcept
    {
        const std::int64_t r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
    Residue neg(Residue a) const noexcept { return reduce(-a); }
    Residue mul(Residue a, Residue b) const noexcept { return reduce(reduce(a) * reduce(b)); }
    Residue pow(Residue base, std::int64_t e) const;
    /// Throws Error(zero_argument) for a = 0.
    Residue inv(Residue a) const;
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

    /// L(x) with g^L(x) = x. Throws Error(zero_argument) for x = 0.
    std::int64_t log(Residue x) const;
    /// g^e for any integer e (reduced mod p - 1).
    Residue exp(std::int64_t e) const noexcept;

    /// zeta^e for e in [0, p-1).
    const std::vector<std::complex<double>> &unit_roots() const noexcept { return roots_; }

private:
    friend ContextPtr build_field_context(std::int64_t p, std::int64_t max_prime);
    FieldContext(std::int64_t p, Residue g);

    std::int64_t p_;
    Residue g_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::complex<double>> roots_;
};

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n) noexcept;

/// Least primitive root of an odd prime p.
Residue least_primitive_root(std::int64_t p);

/// Builds the context for an odd prime p <= max_prime.
/// Errors: even_prime for p = 2, not_prime, prime_too_large.
ContextPtr build_field_context(std::int64_t p, std::int64_t max_prime = kDefaultPrimeBound);

/// Legendre symbol: 0 at x = 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character_value(const FieldContext &ctx, std::int64_t x);

/// Smaller of the two square roots of a. Throws Error(non_residue).
Residue sqrt_mod(const FieldContext &ctx, std::int64_t a);

std::int64_t discrete_log(const FieldContext &ctx, std::int64_t x);

/// p = x^2 + y^2 with x odd, both positive.
struct TwoSquares {
    std::int64_t x;
    std::int64_t y;

    friend bool operator==(const TwoSquares &, const TwoSquares &) = default;
};

/// Cornacchia's algorithm. Throws Error(no_representation) unless p = 1 mod 4,
/// Error(not_prime) if p is not an odd prime.
TwoSquares two_squares_decomposition(std::int64_t p);

/// (-1)^k for any integer k.
constexpr int sign_power(std::int64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

} // namespace charsum
