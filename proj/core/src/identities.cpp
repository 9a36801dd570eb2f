#include "charsum/identities.hpp"

#include <algorithm>
#include <cmath>

namespace charsum {

void IdentityTally::record(double error, double tolerance)
{
    ++checked;
    max_error = std::max(max_error, error);
    if (error < tolerance)
        ++held;
}

std::vector<IdentityTally> check_symbol_identities(const ContextPtr &ctx, double tolerance)
{
    const FieldContext &f = *ctx;
    const std::int64_t p = f.p();
    const std::int64_t n = f.group_order();
    const double pd = static_cast<double>(p);
    const double scale = pd / (pd - 1.0);
    const BinomialTable binom(ctx);
    const Character eps = trivial_character(ctx);
    const Character phi = quadratic_character(ctx);
    const auto chars = all_characters(ctx);
    auto val = [&](const Character &c, std::int64_t x) { return c(x).to_complex(f); };

    IdentityTally t1a{"expand_1_plus_x"}, t1b{"expand_1_minus_x"}, t1c{"binom_symmetry"}, t1d{"binom_swap"}, t1e{"binom_trivial"},
        t1f{"binom_duplication"}, t2a{"binom_square"}, t2b{"sum_a2_minus_x2"}, t3{"sum_chi_x2_phi"}, tref{"reflection"};

    for (const auto &a : chars) {
        for (Residue x = 0; x < p; ++x) {
            CompensatedSum sa, sb;
            for (const auto &chi : chars) {
                const Complex cx = val(chi, x);
                sa.add(binom(a, chi) * cx);
                sb.add(binom(a * chi, chi) * cx);
            }
            const double d = delta_indicator(f, x);
            t1a.record(std::abs(val(a, 1 + x) - (d + scale * sa.value())), tolerance);
            t1b.record(std::abs(val(a.conj(), 1 - x) - (d + scale * sb.value())), tolerance);
        }

        for (const auto &b : chars) {
            const Complex ab = binom(a, b);
            t1c.record(std::abs(ab - binom(a, a * b.conj())), tolerance);
            t1d.record(std::abs(ab - binom(b * a.conj(), b) * val(b, -1)), tolerance);
        }

        const double expect_e = -1.0 / pd + (pd - 1.0) / pd * delta_char(a);
        t1e.record(std::max(std::abs(binom(a, eps) - expect_e), std::abs(binom(a, a) - expect_e)),
                   tolerance);

        const Complex lhs2a = binom(a.pow(2), a);
        const Complex rhs2a =
            a.is_trivial() ? Complex((pd - 2.0) / pd) : binom(phi * a, a) * val(a, 4);
        t2a.record(std::abs(lhs2a - rhs2a), tolerance);

        for (Residue s = 1; s < p; ++s) {
            ExponentHistogram hist(n);
            for (Residue x = 0; x < p; ++x)
                hist.add(a(f.sub(f.mul(s, s), f.mul(x, x))));
            const Complex lhs = hist.evaluate(f);
            const Complex first = pd * val(a, 4 * s % p * s) * binom(a.conj().pow(2), a.conj());
            const Complex second = a.is_trivial()
                                       ? Complex(pd - 2.0)
                                       : pd * val(a, f.mul(s, s)) * binom(phi * a.conj(), a.conj());
            t2b.record(std::max(std::abs(lhs - first), std::abs(lhs - second)), tolerance);
        }

        // sum_chi_x2_phi, stated for every character chi.
        ExponentHistogram hist3(n);
        for (Residue x = 0; x < p; ++x) {
            const Residue sq = f.mul(x, x);
            hist3.add(a(sq) * phi(1 - sq));
        }
        const Complex rhs3 = pd * val(phi, -1) * (binom(phi * a, a) + binom(a, phi * a));
        t3.record(std::abs(hist3.evaluate(f) - rhs3), tolerance);
    }

    for (const auto &b : chars) {
        const Complex inverse_factor = binom(phi, phi * b);
        for (const auto &chi : chars) {
            if (std::abs(inverse_factor) < tolerance) {
                ++t1f.skipped;
                continue;
            }
            const Complex lhs = binom(b.pow(2) * chi.pow(2), chi);
            const Complex rhs = binom(phi * b * chi, chi) * binom(b * chi, b.pow(2) * chi) /
                                inverse_factor * val(b * chi, 4);
            t1f.record(std::abs(lhs - rhs), tolerance);
        }
    }

    const int phi_minus_one = quadratic_character_value(f, -1);
    for (Residue x = 2; x < p; ++x) {
        const bool same = two_f_one_quadratic_exact(f, x) ==
                          Rational(phi_minus_one) * two_f_one_quadratic_exact(f, 1 - x);
        tref.record(same ? 0.0 : 1.0, 0.5);
    }

    return {t1a, t1b, t1c, t1d, t1e, t1f, t2a, t2b, t3, tref};
}

} // namespace charsum
