#include "charsum/curves.hpp"

#include "charsum/error.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace charsum {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string mod_p(const FieldContext &ctx) { return " (mod " + std::to_string(ctx.p()) + ")"; }

// Number of t with t^2 = v.
std::int64_t square_roots(const FieldContext &ctx, Residue v) { return 1 + quadratic_character_value(ctx, v); }

// Number of s with s^2 * den = num.
std::int64_t solutions_of_ratio(const FieldContext &ctx, Residue num, Residue den)
{
    if (den == 0)
        return num == 0 ? ctx.p() : 0;
    return square_roots(ctx, ctx.mul(num, den));
}

std::int64_t to_integer(const Rational &r)
{
    if (r.denominator() != 1)
        throw std::logic_error("count formula produced non-integer " + to_string(r));
    return r.numerator();
}

} // namespace

std::string_view model_kind(const CurveModel &model) noexcept
{
    return std::visit(overloaded{
                          [](const Edwards &) { return std::string_view("edwards"); },
                          [](const TwistedEdwards &) { return std::string_view("twisted"); },
                          [](const Legendre &) { return std::string_view("legendre"); },
                          [](const Clausen &) { return std::string_view("clausen"); },
                          [](const Weierstrass &) { return std::string_view("weierstrass"); },
                      },
                      model);
}

std::string describe(const CurveModel &model)
{
    std::ostringstream os;
    os << model_kind(model);
    std::visit(overloaded{
                   [&](const Edwards &m) { os << " a=" << m.a; },
                   [&](const TwistedEdwards &m) { os << " a=" << m.a << " d=" << m.d; },
                   [&](const Legendre &m) { os << " lambda=" << m.lambda; },
                   [&](const Clausen &m) { os << " lambda=" << m.lambda; },
                   [&](const Weierstrass &m) { os << " a=" << m.a << " b=" << m.b; },
               },
               model);
    return os.str();
}

CurveModel reduce_model(const CurveModel &model, const FieldContext &ctx)
{
    return std::visit(overloaded{
                          [&](const Edwards &m) -> CurveModel { return Edwards{ctx.reduce(m.a)}; },
                          [&](const TwistedEdwards &m) -> CurveModel {
                              return TwistedEdwards{ctx.reduce(m.a), ctx.reduce(m.d)};
                          },
                          [&](const Legendre &m) -> CurveModel { return Legendre{ctx.reduce(m.lambda)}; },
                          [&](const Clausen &m) -> CurveModel { return Clausen{ctx.reduce(m.lambda)}; },
                          [&](const Weierstrass &m) -> CurveModel {
                              return Weierstrass{ctx.reduce(m.a), ctx.reduce(m.b)};
                          },
                      },
                      model);
}

std::string_view to_string(CountMethod method) noexcept
{
    return method == CountMethod::brute ? "brute" : "formula";
}

void validate_model(const CurveModel &model, const FieldContext &ctx)
{
    std::visit(overloaded{
                   [&](const Edwards &m) {
                       if (ctx.pow(m.a, 5) == ctx.reduce(m.a))
                           throw Error(Errc::invalid_model, "Edwards: a^5 ≡ a" + mod_p(ctx));
                   },
                   [&](const TwistedEdwards &m) {
                       if (ctx.mul(ctx.mul(m.a, m.d), m.a - m.d) == 0)
                           throw Error(Errc::invalid_model, "twisted Edwards: a·d·(a−d) ≡ 0" + mod_p(ctx));
                   },
                   [&](const Legendre &m) {
                       if (ctx.mul(m.lambda, m.lambda - 1) == 0)
                           throw Error(Errc::invalid_model, "Legendre: λ(λ−1) ≡ 0" + mod_p(ctx));
                   },
                   [&](const Clausen &m) {
                       if (ctx.mul(m.lambda, m.lambda + 1) == 0)
                           throw Error(Errc::invalid_model, "Clausen: λ(λ+1) ≡ 0" + mod_p(ctx));
                   },
                   [&](const Weierstrass &m) {
                       if (ctx.mul(ctx.mul(m.a, m.b), m.a - m.b) == 0)
                           throw Error(Errc::invalid_model, "Weierstrass: a·b·(a−b) ≡ 0" + mod_p(ctx));
                   },
               },
               model);
}

bool on_curve(const CurveModel &model, const FieldContext &ctx, AffinePoint pt)
{
    const Residue x = ctx.reduce(pt.x);
    const Residue y = ctx.reduce(pt.y);
    const Residue x2 = ctx.mul(x, x);
    const Residue y2 = ctx.mul(y, y);
    return std::visit(
        overloaded{
            [&](const Edwards &m) {
                const Residue a2 = ctx.mul(m.a, m.a);
                return ctx.add(x2, y2) == ctx.mul(a2, 1 + ctx.mul(x2, y2));
            },
            [&](const TwistedEdwards &m) {
                return ctx.add(ctx.mul(m.a, x2), y2) == ctx.add(1, ctx.mul(m.d, ctx.mul(x2, y2)));
            },
            [&](const Legendre &m) { return y2 == ctx.mul(ctx.mul(x, x - 1), x - m.lambda); },
            [&](const Clausen &m) { return y2 == ctx.mul(x - 1, x2 + m.lambda); },
            [&](const Weierstrass &m) { return y2 == ctx.mul(ctx.mul(x, x - m.a), x - m.b); },
        },
        model);
}

std::int64_t count_affine_points(const CurveModel &model, const FieldContext &ctx)
{
    const std::int64_t p = ctx.p();
    std::int64_t count = 0;
    std::visit(overloaded{
                   [&](const Edwards &m) {
                       // y^2 (1 - a^2 x^2) = a^2 - x^2
                       const Residue a2 = ctx.mul(m.a, m.a);
                       for (Residue x = 0; x < p; ++x) {
                           const Residue x2 = ctx.mul(x, x);
                           count += solutions_of_ratio(ctx, ctx.sub(a2, x2), ctx.sub(1, ctx.mul(a2, x2)));
                       }
                   },
                   [&](const TwistedEdwards &m) {
                       // x^2 (a - d y^2) = 1 - y^2
                       for (Residue y = 0; y < p; ++y) {
                           const Residue y2 = ctx.mul(y, y);
                           count += solutions_of_ratio(ctx, ctx.sub(1, y2), ctx.sub(m.a, ctx.mul(m.d, y2)));
                       }
                   },
                   [&](const Legendre &m) {
                       for (Residue x = 0; x < p; ++x)
                           count += square_roots(ctx, ctx.mul(ctx.mul(x, x - 1), x - m.lambda));
                   },
                   [&](const Clausen &m) {
                       for (Residue x = 0; x < p; ++x)
                           count += square_roots(ctx, ctx.mul(x - 1, ctx.mul(x, x) + m.lambda));
                   },
                   [&](const Weierstrass &m) {
                       for (Residue x = 0; x < p; ++x)
                           count += square_roots(ctx, ctx.mul(ctx.mul(x, x - m.a), x - m.b));
                   },
               },
               reduce_model(model, ctx));
    return count;
}

std::int64_t count_points_at_infinity(const CurveModel &model, const FieldContext &ctx)
{
    return std::visit(overloaded{
                          [](const Edwards &) -> std::int64_t { return 4; },
                          [&](const TwistedEdwards &m) -> std::int64_t {
                              return (1 + quadratic_character_value(ctx, ctx.mul(m.a, m.d))) +
                                     (1 + quadratic_character_value(ctx, m.d));
                          },
                          [](const auto &) -> std::int64_t { return 1; },
                      },
                      model);
}

namespace {

std::optional<CurveModel> partner_of(const CurveModel &model, const FieldContext &ctx)
{
    if (const auto *e = std::get_if<Edwards>(&model))
        return isogenous_legendre_partner(*e, ctx);
    if (const auto *w = std::get_if<Weierstrass>(&model))
        return twisted_partner_of_weierstrass(w->a, w->b, ctx);
    return std::nullopt;
}

} // namespace

CountReport count_points_brute(const CurveModel &model, const FieldContext &ctx)
{
    const CurveModel m = reduce_model(model, ctx);
    validate_model(m, ctx);
    CountReport report{.model = m, .p = ctx.p(), .method = CountMethod::brute};
    report.affine = count_affine_points(m, ctx);
    report.non_affine = count_points_at_infinity(m, ctx);
    report.total = report.affine + report.non_affine;
    report.isogeny_partner = partner_of(m, ctx);
    return report;
}

TwistedFormulaForms twisted_edwards_formula_forms(const TwistedEdwards &model, const FieldContext &ctx)
{
    const CurveModel reduced = reduce_model(model, ctx);
    validate_model(reduced, ctx);
    const auto &m = std::get<TwistedEdwards>(reduced);
    const std::int64_t p = ctx.p();
    const Residue ratio = ctx.div(m.d, m.a);
    const Rational f_quad = two_f_one_quadratic_exact(ctx, ratio);
    const Rational f_mixed = two_f_one_phi_eps_phi_exact(ctx, ratio);
    const Rational weight(p * quadratic_character_value(ctx, -m.a));
    return {
        Rational(2 + p + quadratic_character_value(ctx, m.a)) + weight * (f_quad + f_mixed),
        Rational(2 + p - quadratic_character_value(ctx, m.d)) + weight * f_quad,
    };
}

CountReport count_points_formula(const CurveModel &model, const FieldContext &ctx)
{
    const CurveModel m = reduce_model(model, ctx);
    validate_model(m, ctx);
    const std::int64_t p = ctx.p();
    CountReport report{.model = m, .p = p, .method = CountMethod::formula};
    std::visit(overloaded{
                   [&](const Edwards &e) {
                       const Rational f = two_f_one_quadratic_exact(ctx, ctx.sub(1, ctx.pow(e.a, 4)));
                       report.hyper_value = f;
                       report.total = to_integer(Rational(1 + p) + Rational(p) * f);
                   },
                   [&](const TwistedEdwards &t) {
                       const auto forms = twisted_edwards_formula_forms(t, ctx);
                       if (forms.long_form != forms.particular_form)
                           throw std::logic_error("twisted Edwards formula forms disagree: " +
                                                  to_string(forms.long_form) + " vs " +
                                                  to_string(forms.particular_form));
                       report.hyper_value = two_f_one_quadratic_exact(ctx, ctx.div(t.d, t.a));
                       report.total = to_integer(forms.particular_form);
                   },
                   [&](const Legendre &l) {
                       const Rational f = two_f_one_quadratic_exact(ctx, l.lambda);
                       report.hyper_value = f;
                       report.total = to_integer(Rational(1 + p) +
                                                 Rational(p * quadratic_character_value(ctx, -1)) * f);
                   },
                   [&](const auto &) {
                       throw Error(Errc::unsupported_model,
                                   "no closed-form count for " + std::string(model_kind(m)) + " models");
                   },
               },
               m);
    if (const auto *t = std::get_if<TwistedEdwards>(&m)) {
        // The closed form adds 2 + #{y : d y^2 = a} to the affine count, not
        // the smooth-model count at infinity.
        report.non_affine = 3 + quadratic_character_value(ctx, ctx.mul(t->a, t->d));
    } else {
        report.non_affine = count_points_at_infinity(m, ctx);
    }
    report.affine = report.total - report.non_affine;
    report.isogeny_partner = partner_of(m, ctx);
    return report;
}

std::optional<std::int64_t> special_value_count(const CurveModel &model, const FieldContext &ctx)
{
    const CurveModel m = reduce_model(model, ctx);
    validate_model(m, ctx);
    const std::int64_t p = ctx.p();
    // 2x(-1)^((x+y+1)/2), the numerator of the special 2F1 value.
    auto special_term = [p]() -> std::int64_t {
        if (p % 4 == 3)
            return 0;
        const TwoSquares ts = two_squares_decomposition(p);
        return 2 * ts.x * sign_power((ts.x + ts.y + 1) / 2);
    };
    if (const auto *e = std::get_if<Edwards>(&m)) {
        if (!classify_special_argument(ctx.pow(e->a, 4), p))
            return std::nullopt;
        return 1 + p + special_term();
    }
    if (const auto *t = std::get_if<TwistedEdwards>(&m)) {
        if (!classify_special_argument(ctx.div(t->d, t->a), p))
            return std::nullopt;
        return 2 + p - quadratic_character_value(ctx, t->d) +
               quadratic_character_value(ctx, t->a) * special_term();
    }
    return std::nullopt;
}

AffinePoint edwards_negate(const AffinePoint &pt, const FieldContext &ctx)
{
    return {ctx.neg(pt.x), ctx.reduce(pt.y)};
}

AffinePoint edwards_add(const AffinePoint &p1, const AffinePoint &p2, const Edwards &model,
                        const FieldContext &ctx)
{
    const CurveModel m = reduce_model(model, ctx);
    validate_model(m, ctx);
    for (const auto &pt : {p1, p2}) {
        if (!on_curve(m, ctx, pt))
            throw Error(Errc::not_on_curve, "(" + std::to_string(pt.x) + ", " + std::to_string(pt.y) +
                                                ") is not on " + describe(m));
    }
    const Residue x1 = ctx.reduce(p1.x), y1 = ctx.reduce(p1.y);
    const Residue x2 = ctx.reduce(p2.x), y2 = ctx.reduce(p2.y);
    const Residue t = ctx.mul(ctx.mul(x1, x2), ctx.mul(y1, y2));
    const Residue den_x = ctx.add(1, t);
    const Residue den_y = ctx.sub(1, t);
    if (den_x == 0 || den_y == 0)
        throw Error(Errc::exceptional_addition, "1 ± x1·x2·y1·y2 vanishes");
    const Residue a_inv = ctx.inv(model.a);
    const Residue x3 = ctx.mul(a_inv, ctx.div(ctx.add(ctx.mul(x1, y2), ctx.mul(x2, y1)), den_x));
    const Residue y3 = ctx.mul(a_inv, ctx.div(ctx.sub(ctx.mul(y1, y2), ctx.mul(x1, x2)), den_y));
    return {x3, y3};
}

CurveModel isogenous_legendre_partner(const Edwards &model, const FieldContext &ctx)
{
    validate_model(model, ctx);
    return Legendre{ctx.pow(model.a, 4)};
}

CurveModel twisted_partner_of_weierstrass(std::int64_t a, std::int64_t b, const FieldContext &ctx)
{
    if (ctx.mul(ctx.mul(a, b), a - b) == 0)
        throw Error(Errc::singular_curve, "y^2 = x(x−a)(x−b) is singular: a·b·(a−b) ≡ 0" + mod_p(ctx));
    return TwistedEdwards{ctx.mul(4, a), ctx.mul(4, b)};
}

HypergeometricSeries clausen_series(const ContextPtr &ctx)
{
    const Character phi = quadratic_character(ctx);
    const Character eps = trivial_character(ctx);
    return HypergeometricSeries({phi, phi, phi}, {eps, eps});
}

ClausenCheck clausen_identity_check(std::int64_t lambda, const HypergeometricSeries &three_f_two,
                                    double tolerance)
{
    const FieldContext &ctx = *three_f_two.context();
    const Residue l = ctx.reduce(lambda);
    if (ctx.mul(l, l + 1) == 0)
        throw Error(Errc::degenerate_lambda, "λ(λ+1) ≡ 0" + mod_p(ctx));
    const std::int64_t p = ctx.p();
    const double p2 = static_cast<double>(p) * static_cast<double>(p);

    ClausenCheck check;
    check.count = count_points_brute(Clausen{l}, ctx).total;
    const std::int64_t trace = 1 + p - check.count;
    check.lhs = trace * trace;
    check.three_f_two = three_f_two(ctx.div(l, l + 1));
    check.rhs = static_cast<double>(p) +
                p2 * static_cast<double>(quadratic_character_value(ctx, l + 1)) * check.three_f_two;
    check.error = std::abs(static_cast<double>(check.lhs) - check.rhs);
    check.pass = check.error < tolerance * p2;
    return check;
}

ClausenCheck clausen_identity_check(std::int64_t lambda, const ContextPtr &ctx, double tolerance)
{
    return clausen_identity_check(lambda, clausen_series(ctx), tolerance);
}

} // namespace charsum
