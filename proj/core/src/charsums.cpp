#include "charsum/charsums.hpp"

#include "charsum/error.hpp"

#include <cmath>
#include <numbers>

namespace charsum {

std::string to_string(const Rational &r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string &text)
{
    auto parse_int = [&](const std::string &s) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw Error(Errc::invalid_params, "malformed rational '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw Error(Errc::invalid_params, "zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

void CompensatedSum::accumulate(double &sum, double &err, double v) noexcept
{
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
        err += (sum - t) + v;
    else
        err += (v - t) + sum;
    sum = t;
}

void CompensatedSum::add(Complex v) noexcept
{
    accumulate(re_, re_err_, v.real());
    accumulate(im_, im_err_, v.imag());
}

ExponentHistogram::ExponentHistogram(std::int64_t modulus)
    : counts_(static_cast<std::size_t>(modulus), 0)
{
}

void ExponentHistogram::add(const CharValue &v, std::int64_t weight)
{
    if (!v.is_zero())
        add_exponent(v.exponent(), weight);
}

void ExponentHistogram::add_exponent(std::int64_t e, std::int64_t weight)
{
    const std::int64_t n = modulus();
    std::int64_t k = e % n;
    if (k < 0)
        k += n;
    counts_[static_cast<std::size_t>(k)] += weight;
}

void ExponentHistogram::rotate(std::int64_t shift)
{
    const std::int64_t n = modulus();
    std::int64_t s = shift % n;
    if (s < 0)
        s += n;
    std::vector<std::int64_t> rotated(counts_.size(), 0);
    for (std::int64_t e = 0; e < n; ++e)
        rotated[static_cast<std::size_t>((e + s) % n)] = counts_[static_cast<std::size_t>(e)];
    counts_ = std::move(rotated);
}

std::optional<std::int64_t> ExponentHistogram::to_integer() const noexcept
{
    const std::int64_t n = modulus();
    std::int64_t value = counts_[0];
    for (std::int64_t e = 1; e < n; ++e) {
        const std::int64_t c = counts_[static_cast<std::size_t>(e)];
        if (c == 0)
            continue;
        if (2 * e != n)
            return std::nullopt;
        value -= c;
    }
    return value;
}

Complex ExponentHistogram::evaluate(const FieldContext &ctx) const
{
    const auto &roots = ctx.unit_roots();
    CompensatedSum sum;
    for (std::size_t e = 0; e < counts_.size(); ++e) {
        if (counts_[e] != 0)
            sum.add(static_cast<double>(counts_[e]) * roots[e]);
    }
    return sum.value();
}

int delta_indicator(const FieldContext &ctx, std::int64_t x) { return ctx.reduce(x) == 0 ? 1 : 0; }

int delta_char(const Character &a) noexcept { return a.is_trivial() ? 1 : 0; }

ExponentHistogram jacobi_histogram(const Character &a, const Character &b)
{
    require_same_context(a, b);
    const FieldContext &ctx = *a.context();
    ExponentHistogram hist(ctx.group_order());
    // x = 0 and x = 1 contribute nothing since every character vanishes at 0.
    for (Residue x = 2; x < ctx.p(); ++x)
        hist.add_exponent(a.index() * ctx.log(x) + b.index() * ctx.log(1 - x + ctx.p()));
    return hist;
}

Complex jacobi_sum(const Character &a, const Character &b)
{
    return jacobi_histogram(a, b).evaluate(*a.context());
}

Complex gauss_sum(const Character &chi)
{
    const FieldContext &ctx = *chi.context();
    const double p = static_cast<double>(ctx.p());
    CompensatedSum sum;
    for (Residue x = 1; x < ctx.p(); ++x) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(x) / p;
        sum.add(chi(x).to_complex(ctx) * Complex(std::cos(angle), std::sin(angle)));
    }
    return sum.value();
}

GaussSumTable::GaussSumTable(ContextPtr ctx) : ctx_(std::move(ctx))
{
    const std::int64_t p = ctx_->p();
    const std::int64_t n = ctx_->group_order();
    const auto &roots = ctx_->unit_roots();

    // psi(g^m) for m in [0, n): the additive character along the generator.
    std::vector<Complex> psi(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(ctx_->exp(m)) / static_cast<double>(p);
        psi[static_cast<std::size_t>(m)] = {std::cos(angle), std::sin(angle)};
    }
    sums_.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        CompensatedSum sum;
        std::int64_t e = 0;
        for (std::int64_t m = 0; m < n; ++m) {
            sum.add(roots[static_cast<std::size_t>(e)] * psi[static_cast<std::size_t>(m)]);
            e += k;
            if (e >= n)
                e -= n;
        }
        sums_[static_cast<std::size_t>(k)] = sum.value();
    }
}

Complex GaussSumTable::operator[](const Character &chi) const
{
    if (chi.p() != ctx_->p())
        throw Error(Errc::context_mismatch, "Gauss sum table built for another prime");
    return sums_[static_cast<std::size_t>(chi.index())];
}

Complex jacobi_sum_fast(const Character &a, const Character &c, const GaussSumTable &gauss)
{
    require_same_context(a, c);
    const Character ac = a * c;
    if (!ac.is_trivial())
        return gauss[a] * gauss[c] / gauss[ac];
    const FieldContext &ctx = *a.context();
    if (a.is_trivial())
        return static_cast<double>(ctx.p() - 2);
    return -a(-1).to_complex(ctx);
}

Complex binomial_symbol(const Character &a, const Character &b)
{
    const FieldContext &ctx = *a.context();
    ExponentHistogram hist = jacobi_histogram(a, b.conj());
    hist.rotate(b(-1).exponent());
    return hist.evaluate(ctx) / static_cast<double>(ctx.p());
}

Complex binomial_symbol_fast(const Character &a, const Character &b, const GaussSumTable &gauss)
{
    const FieldContext &ctx = *a.context();
    return b(-1).to_complex(ctx) * jacobi_sum_fast(a, b.conj(), gauss) / static_cast<double>(ctx.p());
}

BinomialTable::BinomialTable(ContextPtr ctx, BinomialMethod method)
    : ctx_(std::move(ctx)), n_(ctx_->group_order()),
      values_(static_cast<std::size_t>(n_ * n_))
{
    std::optional<GaussSumTable> gauss;
    if (method == BinomialMethod::gauss)
        gauss.emplace(ctx_);
    for (std::int64_t i = 0; i < n_; ++i) {
        const Character a(ctx_, i);
        for (std::int64_t j = 0; j < n_; ++j) {
            const Character b(ctx_, j);
            values_[static_cast<std::size_t>(i * n_ + j)] =
                gauss ? binomial_symbol_fast(a, b, *gauss) : binomial_symbol(a, b);
        }
    }
}

Complex BinomialTable::operator()(const Character &a, const Character &b) const
{
    if (a.p() != ctx_->p() || b.p() != ctx_->p())
        throw Error(Errc::context_mismatch, "binomial table built for another prime");
    return at(a.index(), b.index());
}

Complex BinomialTable::at(std::int64_t a_index, std::int64_t b_index) const
{
    auto wrap = [this](std::int64_t k) {
        const std::int64_t r = k % n_;
        return r < 0 ? r + n_ : r;
    };
    return values_[static_cast<std::size_t>(wrap(a_index) * n_ + wrap(b_index))];
}

void HypergeometricParams::validate() const
{
    if (upper.empty())
        throw Error(Errc::invalid_params, "at least one upper parameter is required");
    if (upper.size() != lower.size() + 1)
        throw Error(Errc::invalid_params, "expected " + std::to_string(lower.size() + 1) +
                                              " upper parameters for " +
                                              std::to_string(lower.size()) + " lower, got " +
                                              std::to_string(upper.size()));
    for (const auto &c : upper)
        require_same_context(upper.front(), c);
    for (const auto &c : lower)
        require_same_context(upper.front(), c);
}

HypergeometricSeries::HypergeometricSeries(std::vector<Character> upper, std::vector<Character> lower,
                                           BinomialMethod method)
{
    HypergeometricParams params{std::move(upper), std::move(lower), 0};
    params.validate();
    ctx_ = params.upper.front().context();

    std::optional<GaussSumTable> gauss;
    if (method == BinomialMethod::gauss)
        gauss.emplace(ctx_);
    auto symbol = [&](const Character &a, const Character &b) {
        return gauss ? binomial_symbol_fast(a, b, *gauss) : binomial_symbol(a, b);
    };

    const std::int64_t n = ctx_->group_order();
    coefficients_.resize(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        const Character chi(ctx_, k);
        Complex c = symbol(params.upper[0] * chi, chi);
        for (std::size_t i = 0; i < params.lower.size(); ++i)
            c *= symbol(params.upper[i + 1] * chi, params.lower[i] * chi);
        coefficients_[static_cast<std::size_t>(k)] = c;
    }
}

Complex HypergeometricSeries::operator()(std::int64_t x) const
{
    const Residue r = ctx_->reduce(x);
    if (r == 0)
        return {0.0, 0.0};
    const std::int64_t n = ctx_->group_order();
    const std::int64_t step = ctx_->log(r);
    const auto &roots = ctx_->unit_roots();
    CompensatedSum sum;
    std::int64_t e = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        sum.add(coefficients_[static_cast<std::size_t>(k)] * roots[static_cast<std::size_t>(e)]);
        e = (e + step) % n;
    }
    const double p = static_cast<double>(ctx_->p());
    return sum.value() * (p / (p - 1.0));
}

Complex hypergeometric_series(const HypergeometricParams &params, BinomialMethod method)
{
    params.validate();
    return HypergeometricSeries(params.upper, params.lower, method)(params.x);
}

std::int64_t legendre_trace(const FieldContext &ctx, std::int64_t lambda)
{
    const Residue l = ctx.reduce(lambda);
    std::int64_t s = 0;
    for (Residue x = 0; x < ctx.p(); ++x)
        s += quadratic_character_value(ctx, ctx.mul(ctx.mul(x, x - 1), x - l));
    return s;
}

Rational two_f_one_quadratic_exact(const FieldContext &ctx, std::int64_t lambda)
{
    const Residue l = ctx.reduce(lambda);
    if (l == 0 || l == 1)
        throw Error(Errc::degenerate_lambda, "lambda = " + std::to_string(l) + " is 0 or 1");
    return Rational(quadratic_character_value(ctx, -1) * legendre_trace(ctx, l), ctx.p());
}

Residue resolve_special_argument(SpecialArgument arg, std::int64_t p)
{
    switch (arg) {
    case SpecialArgument::minus_one: return p - 1;
    case SpecialArgument::half: return (p + 1) / 2;
    case SpecialArgument::two: return 2 % p;
    }
    return 0;
}

std::optional<SpecialArgument> classify_special_argument(std::int64_t lambda, std::int64_t p)
{
    Residue l = lambda % p;
    if (l < 0)
        l += p;
    for (auto arg : {SpecialArgument::minus_one, SpecialArgument::half, SpecialArgument::two}) {
        if (l == resolve_special_argument(arg, p))
            return arg;
    }
    return std::nullopt;
}

std::string to_string(SpecialArgument arg)
{
    switch (arg) {
    case SpecialArgument::minus_one: return "-1";
    case SpecialArgument::half: return "1/2";
    case SpecialArgument::two: return "2";
    }
    return "?";
}

Rational two_f_one_special_value(std::int64_t p, std::int64_t lambda)
{
    if (p == 2)
        throw Error(Errc::even_prime, "p must be an odd prime");
    if (!is_prime(p))
        throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (!classify_special_argument(lambda, p))
        throw Error(Errc::bad_lambda, "lambda = " + std::to_string(lambda) +
                                          " is not one of -1, 1/2, 2 mod " + std::to_string(p));
    if (p % 4 == 3)
        return Rational(0);
    const TwoSquares ts = two_squares_decomposition(p);
    return Rational(2 * ts.x * sign_power((ts.x + ts.y + 1) / 2), p);
}

Rational two_f_one_phi_eps_phi_exact(const FieldContext &ctx, std::int64_t lambda)
{
    const Residue l = ctx.reduce(lambda);
    if (l == 0)
        throw Error(Errc::zero_argument, "lambda must be nonzero");
    return Rational(-(quadratic_character_value(ctx, -l) + quadratic_character_value(ctx, -1)),
                    ctx.p());
}

} // namespace charsum
