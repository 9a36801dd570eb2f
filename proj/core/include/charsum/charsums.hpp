#pragma once

#include "charsum/characters.hpp"
#include "charsum/fp_core.hpp"

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charsum {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

/// Absolute tolerance for comparing character sums at desk-scale primes.
inline constexpr double kDefaultTolerance = 1e-8;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational &r);
/// Parses "num/den" or "num".
Rational parse_rational(const std::string &text);

/// Neumaier-compensated accumulator for complex values.
class CompensatedSum {
public:
    void add(Complex v) noexcept;
    Complex value() const noexcept { return {re_ + re_err_, im_ + im_err_}; }

private:
    static void accumulate(double &sum, double &err, double v) noexcept;

    double re_ = 0.0, re_err_ = 0.0;
    double im_ = 0.0, im_err_ = 0.0;
};

/// Integer multiplicities of zeta^e, e in [0, p-1). Character sums are
/// collected here exactly and only converted to floating point at the end.
class ExponentHistogram {
public:
    explicit ExponentHistogram(std::int64_t modulus);

    void add(const CharValue &v, std::int64_t weight = 1);
    void add_exponent(std::int64_t e, std::int64_t weight = 1);
    /// Multiplies every term by zeta^shift.
    void rotate(std::int64_t shift);

    std::int64_t modulus() const noexcept { return static_cast<std::int64_t>(counts_.size()); }
    std::int64_t count(std::int64_t e) const { return counts_.at(static_cast<std::size_t>(e)); }
    /// The sum as an integer when it is real by construction (only exponents
    /// 0 and (p-1)/2 occupied).
    std::optional<std::int64_t> to_integer() const noexcept;
    Complex evaluate(const FieldContext &ctx) const;

private:
    std::vector<std::int64_t> counts_;
};

/// 1 iff x = 0 in F_p.
int delta_indicator(const FieldContext &ctx, std::int64_t x);
/// 1 iff A is the trivial character.
int delta_char(const Character &a) noexcept;

ExponentHistogram jacobi_histogram(const Character &a, const Character &b);
/// J(A, B) = sum_x A(x) B(1 - x).
Complex jacobi_sum(const Character &a, const Character &b);

/// g(chi) = sum_{x != 0} chi(x) exp(2 pi i x / p).
Complex gauss_sum(const Character &chi);

/// All Gauss sums of one field, g(chi_k) for k in [0, p-1).
class GaussSumTable {
public:
    explicit GaussSumTable(ContextPtr ctx);

    const ContextPtr &context() const noexcept { return ctx_; }
    Complex operator[](const Character &chi) const;

private:
    ContextPtr ctx_;
    std::vector<Complex> sums_;
};

/// Jacobi sum through g(A)g(C)/g(AC), exact in the cases AC = eps.
Complex jacobi_sum_fast(const Character &a, const Character &c, const GaussSumTable &gauss);

/// {A choose B} = B(-1)/p * J(A, conj B), by direct summation.
Complex binomial_symbol(const Character &a, const Character &b);
/// Same value through the Gauss-sum factorisation.
Complex binomial_symbol_fast(const Character &a, const Character &b, const GaussSumTable &gauss);

enum class BinomialMethod { direct, gauss };

/// {A choose B} for every pair of characters of one field.
class BinomialTable {
public:
    explicit BinomialTable(ContextPtr ctx, BinomialMethod method = BinomialMethod::direct);

    const ContextPtr &context() const noexcept { return ctx_; }
    Complex operator()(const Character &a, const Character &b) const;
    Complex at(std::int64_t a_index, std::int64_t b_index) const;

private:
    ContextPtr ctx_;
    std::int64_t n_;
    std::vector<Complex> values_;
};

struct HypergeometricParams {
    std::vector<Character> upper; // A_0 .. A_n
    std::vector<Character> lower; // B_1 .. B_n
    std::int64_t x = 0;

    /// Throws Error(invalid_params) on arity mismatch, Error(context_mismatch)
    /// when the characters disagree on p.
    void validate() const;
};

/// The Gaussian hypergeometric function with fixed parameters, evaluated at
/// arbitrary x. The coefficients
///   c(chi) = {A_0 chi choose chi} prod_i {A_i chi choose B_i chi}
/// are computed once at construction; each evaluation is then O(p).
class HypergeometricSeries {
public:
    HypergeometricSeries(std::vector<Character> upper, std::vector<Character> lower,
                         BinomialMethod method = BinomialMethod::direct);

    const ContextPtr &context() const noexcept { return ctx_; }
    Complex operator()(std::int64_t x) const;

private:
    ContextPtr ctx_;
    std::vector<Complex> coefficients_;
};

Complex hypergeometric_series(const HypergeometricParams &params,
                              BinomialMethod method = BinomialMethod::direct);

/// sum_{x in F_p} phi(x (x - 1) (x - lambda)), integer arithmetic only.
std::int64_t legendre_trace(const FieldContext &ctx, std::int64_t lambda);

/// 2F1(phi, phi; eps | lambda) = phi(-1) * legendre_trace / p.
/// Throws Error(degenerate_lambda) for lambda in {0, 1}.
Rational two_f_one_quadratic_exact(const FieldContext &ctx, std::int64_t lambda);

enum class SpecialArgument { minus_one, half, two };

/// -1, 2^{-1} or 2 as an element of F_p.
Residue resolve_special_argument(SpecialArgument arg, std::int64_t p);
std::optional<SpecialArgument> classify_special_argument(std::int64_t lambda, std::int64_t p);
std::string to_string(SpecialArgument arg);

/// Closed form of 2F1(phi, phi; eps | lambda) for lambda in {-1, 1/2, 2}:
/// 0 for p = 3 mod 4, otherwise 2x(-1)^((x+y+1)/2)/p with p = x^2 + y^2, x odd.
/// Throws Error(bad_lambda) for any other lambda.
Rational two_f_one_special_value(std::int64_t p, std::int64_t lambda);

/// -(phi(-lambda) + phi(-1))/p, the simplified evaluation of
/// 2F1(phi, eps; phi | lambda). It equals the series for lambda != 1; at
/// lambda = 1 the series is phi(-1)(p-2)/p. Throws Error(zero_argument) for
/// lambda = 0.
Rational two_f_one_phi_eps_phi_exact(const FieldContext &ctx, std::int64_t lambda);

} // namespace charsum
