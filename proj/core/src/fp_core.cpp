#include "charsum/fp_core.hpp"

#include "charsum/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace charsum {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t m)
{
    std::int64_t result = 1 % m;
    base %= m;
    if (base < 0)
        base += m;
    while (e > 0) {
        if (e & 1)
            result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return result;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> factors;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        factors.push_back(n);
    return factors;
}

std::int64_t isqrt(std::int64_t n)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

void require_odd_prime(std::int64_t p)
{
    if (p == 2)
        throw Error(Errc::even_prime, "p = 2 is excluded; p must be an odd prime");
    if (!is_prime(p))
        throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
}

} // namespace

bool is_prime(std::int64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0)
            return false;
    }
    return true;
}

Residue least_primitive_root(std::int64_t p)
{
    require_odd_prime(p);
    const auto factors = distinct_prime_factors(p - 1);
    for (Residue g = 2; g < p; ++g) {
        bool generates = true;
        for (auto q : factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return g;
    }
    // Unreachable for prime p.
    throw Error(Errc::not_prime, "no primitive root found for " + std::to_string(p));
}

FieldContext::FieldContext(std::int64_t p, Residue g)
    : p_(p), g_(g), log_(static_cast<std::size_t>(p), 0), exp_(static_cast<std::size_t>(p - 1), 0),
      roots_(static_cast<std::size_t>(p - 1))
{
    const std::int64_t n = p - 1;
    std::int64_t power = 1;
    for (std::int64_t e = 0; e < n; ++e) {
        exp_[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(power);
        log_[static_cast<std::size_t>(power)] = static_cast<std::uint32_t>(e);
        power = power * g % p;
    }
    for (std::int64_t e = 0; e < n; ++e) {
        // Exact values at the quarter turns keep real characters real.
        if (4 * e % n == 0) {
            static constexpr std::complex<double> quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            roots_[static_cast<std::size_t>(e)] = quarter[4 * e / n];
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
        roots_[static_cast<std::size_t>(e)] = {std::cos(angle), std::sin(angle)};
    }
}

ContextPtr build_field_context(std::int64_t p, std::int64_t max_prime)
{
    require_odd_prime(p);
    const std::int64_t bound = std::min(max_prime, kArithmeticPrimeBound);
    if (p > bound)
        throw Error(Errc::prime_too_large,
                    "p = " + std::to_string(p) + " exceeds the table bound " + std::to_string(bound));
    return ContextPtr(new FieldContext(p, least_primitive_root(p)));
}

Residue FieldContext::pow(Residue base, std::int64_t e) const
{
    if (e < 0)
        return mod_pow(inv(base), -e, p_);
    return mod_pow(reduce(base), e, p_);
}

Residue FieldContext::inv(Residue a) const
{
    const Residue r = reduce(a);
    if (r == 0)
        throw Error(Errc::zero_argument, "0 has no inverse in F_" + std::to_string(p_));
    return exp(-log(r));
}

std::int64_t FieldContext::log(Residue x) const
{
    const Residue r = reduce(x);
    if (r == 0)
        throw Error(Errc::zero_argument, "discrete log of 0 is undefined");
    return log_[static_cast<std::size_t>(r)];
}

Residue FieldContext::exp(std::int64_t e) const noexcept
{
    std::int64_t k = e % group_order();
    if (k < 0)
        k += group_order();
    return exp_[static_cast<std::size_t>(k)];
}

int quadratic_character_value(const FieldContext &ctx, std::int64_t x)
{
    const Residue r = ctx.reduce(x);
    if (r == 0)
        return 0;
    return ctx.log(r) % 2 == 0 ? 1 : -1;
}

Residue sqrt_mod(const FieldContext &ctx, std::int64_t a)
{
    const Residue r = ctx.reduce(a);
    if (r == 0)
        return 0;
    const std::int64_t l = ctx.log(r);
    if (l % 2 != 0)
        throw Error(Errc::non_residue,
                    std::to_string(r) + " is not a square mod " + std::to_string(ctx.p()));
    const Residue root = ctx.exp(l / 2);
    return std::min(root, ctx.p() - root);
}

std::int64_t discrete_log(const FieldContext &ctx, std::int64_t x) { return ctx.log(x); }

TwoSquares two_squares_decomposition(std::int64_t p)
{
    require_odd_prime(p);
    if (p % 4 != 1)
        throw Error(Errc::no_representation,
                    std::to_string(p) + " = 3 mod 4 is not a sum of two squares");

    // A square root of -1: c^((p-1)/4) for any non-residue c.
    std::int64_t c = 2;
    while (mod_pow(c, (p - 1) / 2, p) != p - 1)
        ++c;
    std::int64_t a = p;
    std::int64_t b = mod_pow(c, (p - 1) / 4, p);
    while (b * b > p) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    std::int64_t x = b;
    std::int64_t y = isqrt(p - b * b);
    if (x * x + y * y != p)
        throw Error(Errc::no_representation, "Cornacchia failed for " + std::to_string(p));
    if (x % 2 == 0)
        std::swap(x, y);
    return {x, y};
}

} // namespace charsum
