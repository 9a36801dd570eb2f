#pragma once

#include "charsum/charsums.hpp"
#include "charsum/fp_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace charsum {

/// x^2 + y^2 = a^2 (1 + x^2 y^2), a^5 != a.
struct Edwards {
    Residue a;
    friend bool operator==(const Edwards &, const Edwards &) = default;
};

/// a x^2 + y^2 = 1 + d x^2 y^2, a d (a - d) != 0.
struct TwistedEdwards {
    Residue a;
    Residue d;
    friend bool operator==(const TwistedEdwards &, const TwistedEdwards &) = default;
};

/// y^2 = x (x - 1) (x - lambda), lambda (lambda - 1) != 0.
struct Legendre {
    Residue lambda;
    friend bool operator==(const Legendre &, const Legendre &) = default;
};

/// y^2 = (x - 1) (x^2 + lambda), lambda (lambda + 1) != 0.
struct Clausen {
    Residue lambda;
    friend bool operator==(const Clausen &, const Clausen &) = default;
};

/// y^2 = x (x - a) (x - b), a b (a - b) != 0: full rational 2-torsion.
struct Weierstrass {
    Residue a;
    Residue b;
    friend bool operator==(const Weierstrass &, const Weierstrass &) = default;
};

using CurveModel = std::variant<Edwards, TwistedEdwards, Legendre, Clausen, Weierstrass>;

std::string_view model_kind(const CurveModel &model) noexcept;
/// e.g. "edwards a=2", "twisted a=1 d=2".
std::string describe(const CurveModel &model);
/// Parameters reduced into [0, p).
CurveModel reduce_model(const CurveModel &model, const FieldContext &ctx);

struct AffinePoint {
    Residue x;
    Residue y;
    friend bool operator==(const AffinePoint &, const AffinePoint &) = default;
};

enum class CountMethod { brute, formula };
std::string_view to_string(CountMethod method) noexcept;

struct CountReport {
    CurveModel model;
    std::int64_t p = 0;
    CountMethod method = CountMethod::brute;
    std::int64_t affine = 0;
    std::int64_t non_affine = 0;
    std::int64_t total = 0;
    /// The 2F1 value entering the count formula.
    std::optional<Rational> hyper_value = std::nullopt;
    std::optional<CurveModel> isogeny_partner = std::nullopt;
};

/// Throws Error(invalid_model) naming the violated condition.
void validate_model(const CurveModel &model, const FieldContext &ctx);

bool on_curve(const CurveModel &model, const FieldContext &ctx, AffinePoint pt);

/// Affine solutions, O(p): 1 + phi(rhs) solutions per free coordinate.
std::int64_t count_affine_points(const CurveModel &model, const FieldContext &ctx);

/// Rational points of the smooth model lying over the points at infinity of
/// the plane curve.
///
/// Edwards: 4. The two singular points (1:0:0), (0:1:0) each carry two
/// branches with tangent slopes +-a, always rational.
/// Twisted Edwards: (1 + phi(a d)) + (1 + phi(d)). The branches through
/// (1:0:0) are rational iff a/d is a square, those through (0:1:0) iff d is;
/// 1 + phi(a d) is also the number of y with d y^2 = a.
/// Cubic models: 1.
std::int64_t count_points_at_infinity(const CurveModel &model, const FieldContext &ctx);

CountReport count_points_brute(const CurveModel &model, const FieldContext &ctx);

/// Closed-form count through exact 2F1 values:
///   Edwards          1 + p + p 2F1(phi,phi;eps | 1 - a^4)
///   Twisted Edwards  2 + p - phi(d) + p phi(-a) 2F1(phi,phi;eps | d/a)
///                    (the long form with 2F1(phi,eps;phi | d/a) is evaluated
///                    too and must agree)
///   Legendre         1 + p + p phi(-1) 2F1(phi,phi;eps | lambda)
/// Clausen and Weierstrass throw Error(unsupported_model).
/// For twisted Edwards, non_affine is 2 + #{y : d y^2 = a}, the term the
/// closed form adds to the affine count; affine then agrees with brute force.
CountReport count_points_formula(const CurveModel &model, const FieldContext &ctx);

/// Both twisted Edwards closed forms (long, and with 2F1(phi,eps;phi) evaluated) as exact rationals.
struct TwistedFormulaForms {
    Rational long_form;
    Rational particular_form;
};
TwistedFormulaForms twisted_edwards_formula_forms(const TwistedEdwards &model, const FieldContext &ctx);

/// Count predicted by the special values 2F1(phi,phi;eps | -1, 1/2, 2):
///   Edwards with a^4 in {-1, 1/2, 2}:
///     1 + p, or 1 + p + 2x(-1)^((x+y+1)/2) for p = 1 mod 4;
///   Twisted Edwards with d/a in {-1, 1/2, 2}:
///     2 + p - phi(d), or 2 + p - phi(d) + 2x phi(a)(-1)^((x+y+1)/2) for p = 1 mod 4.
/// nullopt when the model has no such parameter.
std::optional<std::int64_t> special_value_count(const CurveModel &model, const FieldContext &ctx);

inline AffinePoint edwards_identity(const Edwards &model) { return {0, model.a}; }
AffinePoint edwards_negate(const AffinePoint &pt, const FieldContext &ctx);

/// x3 = (x1 y2 + x2 y1) / (a (1 + x1 x2 y1 y2)), y3 = (y1 y2 - x1 x2) / (a (1 - x1 x2 y1 y2)).
/// Throws Error(not_on_curve) or Error(exceptional_addition) when a
/// denominator vanishes.
AffinePoint edwards_add(const AffinePoint &p1, const AffinePoint &p2, const Edwards &model,
                        const FieldContext &ctx);

/// Legendre{a^4}, which has the same number of points.
CurveModel isogenous_legendre_partner(const Edwards &model, const FieldContext &ctx);

/// TwistedEdwards{4a, 4b}, 2-isogenous to y^2 = x (x - a) (x - b).
/// Throws Error(singular_curve) if a b (a - b) = 0.
CurveModel twisted_partner_of_weierstrass(std::int64_t a, std::int64_t b, const FieldContext &ctx);

struct ClausenCheck {
    std::int64_t count = 0;
    /// (1 + p - N)^2
    std::int64_t lhs = 0;
    /// p + p^2 phi(lambda + 1) 3F2(phi,phi,phi; eps,eps | lambda/(lambda+1))
    Complex rhs;
    Complex three_f_two;
    double error = 0.0;
    bool pass = false;
};

/// Passes iff |lhs - rhs| < tolerance * p^2. Throws Error(degenerate_lambda)
/// if lambda (lambda + 1) = 0.
ClausenCheck clausen_identity_check(std::int64_t lambda, const ContextPtr &ctx, double tolerance = 1e-6);

/// 3F2(phi,phi,phi; eps,eps | .), shareable across clausen checks over one prime.
HypergeometricSeries clausen_series(const ContextPtr &ctx);
ClausenCheck clausen_identity_check(std::int64_t lambda, const HypergeometricSeries &three_f_two,
                                    double tolerance = 1e-6);

} // namespace charsum
