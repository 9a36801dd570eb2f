#include "scan.hpp"

#include <charsum/charsums.hpp>
#include <charsum/curves.hpp>
#include <charsum/identities.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace charsum::cli {

namespace {

using charsum::to_string;

constexpr Suite kAllSuites[] = {Suite::thm1, Suite::thm2, Suite::cor_iso,
                                Suite::prop1, Suite::lemmas, Suite::clausen};

VerificationRecord compare(std::int64_t p, std::string params, std::int64_t lhs, std::int64_t rhs,
                           std::optional<std::string> hyper = std::nullopt)
{
    return {p, std::move(params), lhs, rhs, lhs == rhs, std::move(hyper)};
}

std::vector<VerificationRecord> thm1_records(const FieldContext &f)
{
    std::vector<VerificationRecord> out;
    for (Residue a = 1; a < f.p(); ++a) {
        if (f.pow(a, 5) == a)
            continue;
        const Edwards e{a};
        const auto formula = count_points_formula(e, f);
        out.push_back(compare(f.p(), describe(e), count_points_brute(e, f).total, formula.total,
                              to_string(*formula.hyper_value)));
    }
    return out;
}

std::vector<VerificationRecord> thm2_records(const FieldContext &f)
{
    std::vector<VerificationRecord> out;
    for (Residue a = 1; a < f.p(); ++a) {
        for (Residue d = 1; d < f.p(); ++d) {
            if (a == d)
                continue;
            const TwistedEdwards t{a, d};
            const auto formula = count_points_formula(t, f);
            out.push_back(compare(f.p(), describe(t), count_points_brute(t, f).total, formula.total,
                                  to_string(*formula.hyper_value)));
        }
    }
    return out;
}

std::vector<VerificationRecord> cor_iso_records(const FieldContext &f)
{
    std::vector<VerificationRecord> out;
    for (Residue a = 1; a < f.p(); ++a) {
        if (f.pow(a, 5) == a)
            continue;
        const Edwards e{a};
        const CurveModel partner = isogenous_legendre_partner(e, f);
        out.push_back(compare(f.p(), describe(e) + " ~ " + describe(partner), count_points_brute(e, f).total,
                              count_points_brute(partner, f).total));
    }
    for (Residue a = 1; a < f.p(); ++a) {
        for (Residue b = 1; b < f.p(); ++b) {
            if (a == b)
                continue;
            const Weierstrass w{a, b};
            const CurveModel partner = twisted_partner_of_weierstrass(a, b, f);
            out.push_back(compare(f.p(), describe(w) + " ~ " + describe(partner),
                                  count_points_brute(w, f).total, count_points_brute(partner, f).total));
        }
    }
    return out;
}

std::vector<VerificationRecord> prop1_records(const FieldContext &f)
{
    std::vector<VerificationRecord> out;
    const std::int64_t p = f.p();
    for (auto arg : {SpecialArgument::minus_one, SpecialArgument::half, SpecialArgument::two}) {
        const Residue lambda = resolve_special_argument(arg, p);
        const Rational trace = two_f_one_quadratic_exact(f, lambda);
        const Rational closed = two_f_one_special_value(p, lambda);
        // Both are integers over p.
        out.push_back(compare(p, "lambda=" + to_string(arg), (trace * p).numerator(),
                              (closed * p).numerator(), to_string(trace)));
    }
    return out;
}

std::vector<VerificationRecord> lemma_records(const ContextPtr &ctx, double tolerance)
{
    std::vector<VerificationRecord> out;
    for (const auto &t : check_symbol_identities(ctx, tolerance)) {
        std::string params = t.name;
        if (t.skipped)
            params += " skipped=" + std::to_string(t.skipped);
        out.push_back(compare(ctx->p(), std::move(params), t.checked, t.held));
    }
    return out;
}

std::vector<VerificationRecord> clausen_records(const ContextPtr &ctx, double tolerance)
{
    std::vector<VerificationRecord> out;
    const FieldContext &f = *ctx;
    const std::int64_t p = f.p();
    const HypergeometricSeries series = clausen_series(ctx);
    for (Residue lambda = 1; lambda + 1 < p; ++lambda) {
        const ClausenCheck check = clausen_identity_check(lambda, series, tolerance);
        const std::int64_t rhs = std::llround(check.rhs.real());
        VerificationRecord r = compare(p, "clausen lambda=" + std::to_string(lambda), check.lhs, rhs);
        if (check.pass) {
            // 3F2 = (rhs - p) / (p^2 phi(lambda + 1)), exact once rhs is pinned.
            r.hyper_value = to_string(Rational(rhs - p, p * p * quadratic_character_value(f, lambda + 1)));
        } else {
            r.match = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> primes;
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n)
        if (is_prime(n))
            primes.push_back(n);
    return primes;
}

} // namespace

std::string_view to_string(Suite suite) noexcept
{
    switch (suite) {
    case Suite::thm1: return "thm1";
    case Suite::thm2: return "thm2";
    case Suite::cor_iso: return "cor-iso";
    case Suite::prop1: return "prop1";
    case Suite::lemmas: return "lemmas";
    case Suite::clausen: return "clausen";
    }
    return "?";
}

std::optional<std::vector<Suite>> parse_suite(std::string_view name)
{
    if (name == "all")
        return std::vector<Suite>(std::begin(kAllSuites), std::end(kAllSuites));
    for (Suite s : kAllSuites)
        if (to_string(s) == name)
            return std::vector<Suite>{s};
    return std::nullopt;
}

std::int64_t suite_min_prime(Suite suite) noexcept
{
    switch (suite) {
    case Suite::thm1:
    case Suite::cor_iso: return 7; // a^5 = a for every a when p = 3, 5
    case Suite::prop1: return 5;
    default: return 3;
    }
}

double suite_default_tolerance(Suite suite) noexcept
{
    return suite == Suite::clausen ? 1e-6 : kDefaultTolerance;
}

std::vector<VerificationRecord> suite_records(Suite suite, const ContextPtr &ctx, double tolerance)
{
    switch (suite) {
    case Suite::thm1: return thm1_records(*ctx);
    case Suite::thm2: return thm2_records(*ctx);
    case Suite::cor_iso: return cor_iso_records(*ctx);
    case Suite::prop1: return prop1_records(*ctx);
    case Suite::lemmas: return lemma_records(ctx, tolerance);
    case Suite::clausen: return clausen_records(ctx, tolerance);
    }
    return {};
}

std::vector<VerificationRecord> run_scan(Suite suite, const ScanOptions &opts)
{
    const auto primes = primes_between(std::max(opts.pmin, suite_min_prime(suite)), opts.pmax);
    const double tolerance = opts.tolerance.value_or(suite_default_tolerance(suite));

    std::vector<std::vector<VerificationRecord>> slots(primes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            try {
                slots[i] = suite_records(suite, build_field_context(primes[i], opts.ceiling), tolerance);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = primes.size();
            }
        }
    };

    const unsigned jobs = std::clamp<unsigned>(opts.jobs, 1, std::max<std::size_t>(primes.size(), 1));
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    if (failure)
        std::rethrow_exception(failure);
    std::vector<VerificationRecord> records;
    for (auto &slot : slots)
        records.insert(records.end(), std::make_move_iterator(slot.begin()), std::make_move_iterator(slot.end()));
    return records;
}

} // namespace charsum::cli
