#include "charsum/characters.hpp"

#include "charsum/error.hpp"

#include <numeric>
#include <string>

namespace charsum {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) noexcept
{
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

CharValue CharValue::root(std::int64_t exponent, std::int64_t modulus) noexcept
{
    return CharValue(modulus, mod(exponent, modulus));
}

CharValue CharValue::conj() const noexcept
{
    if (is_zero())
        return *this;
    return root(-*exponent_, modulus_);
}

std::complex<double> CharValue::to_complex(const FieldContext &ctx) const
{
    if (is_zero())
        return {0.0, 0.0};
    return ctx.unit_roots()[static_cast<std::size_t>(*exponent_)];
}

std::optional<int> CharValue::to_int() const noexcept
{
    if (is_zero())
        return 0;
    if (*exponent_ == 0)
        return 1;
    if (2 * *exponent_ == modulus_)
        return -1;
    return std::nullopt;
}

CharValue operator*(const CharValue &a, const CharValue &b) noexcept
{
    if (a.is_zero() || b.is_zero())
        return CharValue::zero(a.modulus_);
    return CharValue::root(*a.exponent_ + *b.exponent_, a.modulus_);
}

Character::Character(ContextPtr ctx, std::int64_t index)
    : ctx_(std::move(ctx)), index_(mod(index, ctx_->group_order()))
{
}

std::int64_t Character::order() const noexcept
{
    const std::int64_t n = ctx_->group_order();
    return n / std::gcd(index_, n);
}

CharValue Character::operator()(std::int64_t x) const
{
    const std::int64_t n = ctx_->group_order();
    const Residue r = ctx_->reduce(x);
    if (r == 0)
        return CharValue::zero(n);
    return CharValue::root(index_ * ctx_->log(r), n);
}

void require_same_context(const Character &a, const Character &b)
{
    if (a.p() != b.p())
        throw Error(Errc::context_mismatch, "characters over F_" + std::to_string(a.p()) +
                                                " and F_" + std::to_string(b.p()));
}

Character operator*(const Character &a, const Character &b)
{
    require_same_context(a, b);
    return Character(a.ctx_, a.index_ + b.index_);
}

Character character_by_index(const ContextPtr &ctx, std::int64_t k) { return Character(ctx, k); }

CharValue evaluate(const Character &chi, std::int64_t x) { return chi(x); }

Character multiply(const Character &a, const Character &b) { return a * b; }

Character conjugate(const Character &a) { return a.conj(); }

std::vector<Character> all_characters(const ContextPtr &ctx)
{
    std::vector<Character> chars;
    chars.reserve(static_cast<std::size_t>(ctx->group_order()));
    for (std::int64_t k = 0; k < ctx->group_order(); ++k)
        chars.emplace_back(ctx, k);
    return chars;
}

} // namespace charsum
