#pragma once

#include "charsum/fp_core.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace charsum {

/// Exact value of a multiplicative character: either 0 or zeta^e with
/// zeta = exp(2 pi i / (p-1)).
class CharValue {
public:
    static CharValue zero(std::int64_t modulus) noexcept { return CharValue(modulus, std::nullopt); }
    static CharValue root(std::int64_t exponent, std::int64_t modulus) noexcept;

    bool is_zero() const noexcept { return !exponent_; }
    /// Exponent e in [0, p-1). Precondition: !is_zero().
    std::int64_t exponent() const noexcept { return *exponent_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    CharValue conj() const noexcept;
    std::complex<double> to_complex(const FieldContext &ctx) const;
    /// The value as an integer when it is real (0, +1 or -1).
    std::optional<int> to_int() const noexcept;

    friend CharValue operator*(const CharValue &a, const CharValue &b) noexcept;
    friend bool operator==(const CharValue &, const CharValue &) = default;

private:
    CharValue(std::int64_t modulus, std::optional<std::int64_t> exponent) noexcept
        : modulus_(modulus), exponent_(exponent)
    {
    }

    std::int64_t modulus_;
    std::optional<std::int64_t> exponent_;
};

/// chi_k, determined by chi_k(g^m) = zeta^(k m) for the context's least
/// primitive root g, and chi_k(0) = 0.
class Character {
public:
    Character(ContextPtr ctx, std::int64_t index);

    const ContextPtr &context() const noexcept { return ctx_; }
    std::int64_t p() const noexcept { return ctx_->p(); }
    std::int64_t index() const noexcept { return index_; }

    bool is_trivial() const noexcept { return index_ == 0; }
    bool is_quadratic() const noexcept { return 2 * index_ == ctx_->group_order(); }
    std::int64_t order() const noexcept;

    CharValue operator()(std::int64_t x) const;
    Character conj() const { return Character(ctx_, -index_); }
    Character pow(std::int64_t e) const { return Character(ctx_, index_ * e); }

    /// Throws Error(context_mismatch) if the characters live over different primes.
    friend Character operator*(const Character &a, const Character &b);
    friend bool operator==(const Character &a, const Character &b) noexcept
    {
        return a.p() == b.p() && a.index_ == b.index_;
    }

private:
    ContextPtr ctx_;
    std::int64_t index_;
};

void require_same_context(const Character &a, const Character &b);

Character character_by_index(const ContextPtr &ctx, std::int64_t k);
inline Character trivial_character(const ContextPtr &ctx) { return Character(ctx, 0); }
inline Character quadratic_character(const ContextPtr &ctx) { return Character(ctx, ctx->group_order() / 2); }

CharValue evaluate(const Character &chi, std::int64_t x);
Character multiply(const Character &a, const Character &b);
Character conjugate(const Character &a);

/// [chi_0, chi_1, ..., chi_{p-2}].
std::vector<Character> all_characters(const ContextPtr &ctx);

} // namespace charsum
