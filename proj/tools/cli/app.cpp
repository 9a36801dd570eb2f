#include "app.hpp"

#include "report.hpp"
#include "scan.hpp"

#include <charsum/charsums.hpp>
#include <charsum/error.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace charsum::cli {

namespace {

using charsum::to_string;

using nlohmann::json;

struct Options {
    std::string format = "table";
    std::string unsafe_pmax;
    std::string p, pmin, pmax;
    std::string model, a, b, d, lambda, x;
    std::string method = "auto";
    std::string binomial = "direct";
    std::vector<std::string> upper, lower;
    std::string suite, tolerance, jobs;
};

std::int64_t parse_int(const std::string &text, std::string_view what)
{
    std::int64_t v = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw Error(Errc::invalid_params, std::string(what) + ": expected an integer, got '" + text + "'");
    return v;
}

const std::string &need(const std::string &value, std::string_view flag, std::string_view context)
{
    if (value.empty())
        throw Error(Errc::invalid_params, std::string(context) + " needs " + std::string(flag));
    return value;
}

Format format_of(const Options &o)
{
    if (auto f = parse_format(o.format))
        return *f;
    throw Error(Errc::invalid_params, "--format must be table, json or csv, got '" + o.format + "'");
}

std::string fmt_double(double v)
{
    if (v == 0.0)
        v = 0.0; // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string render_rows(Format format, const std::vector<std::string> &header,
                        const std::vector<std::vector<std::string>> &rows)
{
    return format == Format::csv ? render_csv(header, rows) : render_table(header, rows);
}

void check_range(std::int64_t pmin, std::int64_t pmax, std::int64_t ceiling)
{
    if (pmax > ceiling)
        throw Error(Errc::prime_too_large, "--pmax " + std::to_string(pmax) + " exceeds the prime ceiling " +
                                               std::to_string(ceiling) + " (see --unsafe-pmax, CHARSUM_PMAX)");
    if (pmin > pmax)
        throw Error(Errc::invalid_params,
                    "empty prime range [" + std::to_string(pmin) + ", " + std::to_string(pmax) + "]");
}

CurveModel build_model(const Options &o, const FieldContext &f)
{
    const std::string &kind = o.model;
    auto arg = [&](const std::string &v, std::string_view flag) {
        return parse_field_element(need(v, flag, kind + " model"), f);
    };
    if (kind == "edwards")
        return Edwards{arg(o.a, "--a")};
    if (kind == "twisted")
        return TwistedEdwards{arg(o.a, "--a"), arg(o.d, "--d")};
    if (kind == "legendre")
        return Legendre{arg(o.lambda, "--lambda")};
    if (kind == "clausen")
        return Clausen{arg(o.lambda, "--lambda")};
    if (kind == "weierstrass")
        return Weierstrass{arg(o.a, "--a"), arg(o.b, "--b")};
    throw Error(Errc::invalid_params,
                "--model must be edwards, twisted, legendre, clausen or weierstrass, got '" + kind + "'");
}

bool has_formula(const CurveModel &m)
{
    return !std::holds_alternative<Clausen>(m) && !std::holds_alternative<Weierstrass>(m);
}

// count ---------------------------------------------------------------------

int run_count(const Options &o, std::int64_t ceiling, std::ostream &out, std::ostream &err)
{
    const Format format = format_of(o);
    const auto ctx = build_field_context(parse_int(need(o.p, "--p", "count"), "--p"), ceiling);
    const CurveModel model = build_model(o, *ctx);
    validate_model(model, *ctx);

    std::vector<CountReport> reports;
    if (o.method == "brute" || o.method == "both" || (o.method == "auto" && !has_formula(model)))
        reports.push_back(count_points_brute(model, *ctx));
    if (o.method == "formula" || o.method == "both" || (o.method == "auto" && has_formula(model)))
        reports.push_back(count_points_formula(model, *ctx));
    if (reports.empty())
        throw Error(Errc::invalid_params, "--method must be auto, brute, formula or both, got '" + o.method + "'");

    std::optional<bool> match;
    if (reports.size() == 2)
        match = reports[0].total == reports[1].total;

    if (format == Format::json) {
        json doc{{"reports", json::array()}, {"match", match ? json(*match) : json()}};
        for (const auto &r : reports) {
            doc["reports"].push_back({{"model", describe(r.model)},
                                      {"p", r.p},
                                      {"method", std::string(to_string(r.method))},
                                      {"affine", r.affine},
                                      {"non_affine", r.non_affine},
                                      {"total", r.total},
                                      {"hyper_value", r.hyper_value ? json(to_string(*r.hyper_value)) : json()},
                                      {"isogeny_partner",
                                       r.isogeny_partner ? json(describe(*r.isogeny_partner)) : json()}});
        }
        out << doc.dump(2) << '\n';
    } else {
        const char *missing = format == Format::csv ? "" : "-";
        std::vector<std::string> header = {"model", "p",           "method",         "affine",
                                           "non_affine", "total", "hyper_value", "isogeny_partner"};
        if (match)
            header.push_back("match");
        std::vector<std::vector<std::string>> rows;
        for (const auto &r : reports) {
            rows.push_back({describe(r.model), std::to_string(r.p), std::string(to_string(r.method)),
                            std::to_string(r.affine), std::to_string(r.non_affine), std::to_string(r.total),
                            r.hyper_value ? to_string(*r.hyper_value) : missing,
                            r.isogeny_partner ? describe(*r.isogeny_partner) : missing});
            if (match)
                rows.back().push_back(*match ? "true" : "false");
        }
        out << render_rows(format, header, rows);
    }

    if (match && !*match) {
        err << "mismatch: brute " << reports[0].total << " vs formula " << reports[1].total << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

// hyper ---------------------------------------------------------------------

int run_hyper(const Options &o, std::int64_t ceiling, std::ostream &out)
{
    const Format format = format_of(o);
    const auto ctx = build_field_context(parse_int(need(o.p, "--p", "hyper"), "--p"), ceiling);
    const Residue x = parse_field_element(need(o.x, "--x", "hyper"), *ctx);
    BinomialMethod method = BinomialMethod::direct;
    if (o.binomial == "gauss")
        method = BinomialMethod::gauss;
    else if (o.binomial != "direct")
        throw Error(Errc::invalid_params, "--binomial must be direct or gauss, got '" + o.binomial + "'");

    std::vector<Character> upper, lower;
    for (const auto &s : o.upper)
        upper.push_back(parse_character(s, ctx));
    for (const auto &s : o.lower)
        lower.push_back(parse_character(s, ctx));
    if (upper.size() != lower.size() + 1)
        throw Error(Errc::invalid_params, "need one more --upper character than --lower, got " +
                                              std::to_string(upper.size()) + " and " +
                                              std::to_string(lower.size()));

    const Complex value = HypergeometricSeries(upper, lower, method)(x);

    // Closed forms the library knows; at x = 0 every series vanishes.
    std::optional<Rational> exact;
    const auto eps = trivial_character(ctx), phi = quadratic_character(ctx);
    if (x == 0)
        exact = Rational(0);
    else if (upper == std::vector{phi, phi} && lower == std::vector{eps} && x != 1)
        exact = two_f_one_quadratic_exact(*ctx, x);
    else if (upper == std::vector{phi, eps} && lower == std::vector{phi} && x != 1)
        exact = two_f_one_phi_eps_phi_exact(*ctx, x);

    std::optional<double> diff;
    if (exact)
        diff = std::abs(value - Complex(boost::rational_cast<double>(*exact), 0.0));

    if (format == Format::json) {
        json doc{{"p", ctx->p()},
                 {"x", x},
                 {"re", value.real()},
                 {"im", value.imag()},
                 {"exact", exact ? json(to_string(*exact)) : json()},
                 {"abs_diff", diff ? json(*diff) : json()}};
        out << doc.dump(2) << '\n';
    } else {
        const char *missing = format == Format::csv ? "" : "-";
        out << render_rows(format, {"p", "x", "re", "im", "exact", "abs_diff"},
                           {{std::to_string(ctx->p()), std::to_string(x), fmt_double(value.real()),
                             fmt_double(value.imag()), exact ? to_string(*exact) : missing,
                             diff ? fmt_double(*diff) : missing}});
    }
    return kExitOk;
}

// special-values ------------------------------------------------------------

int run_special_values(const Options &o, std::int64_t ceiling, std::ostream &out)
{
    const Format format = format_of(o);
    SpecialArgument arg;
    const std::string &l = need(o.lambda, "--lambda", "special-values");
    if (l == "-1")
        arg = SpecialArgument::minus_one;
    else if (l == "1/2" || l == "2^-1")
        arg = SpecialArgument::half;
    else if (l == "2")
        arg = SpecialArgument::two;
    else
        throw Error(Errc::bad_lambda, "--lambda must be -1, 1/2 or 2, got '" + l + "'");

    std::int64_t pmin, pmax;
    if (!o.p.empty()) {
        pmin = pmax = parse_int(o.p, "--p");
        build_field_context(pmin, ceiling); // names a bad p
    } else {
        pmin = o.pmin.empty() ? 5 : parse_int(o.pmin, "--pmin");
        pmax = parse_int(need(o.pmax, "--p or --pmax", "special-values"), "--pmax");
    }
    check_range(pmin, pmax, ceiling);

    const std::string dash = "—";
    std::vector<std::vector<std::string>> rows;
    json doc = json::array();
    for (std::int64_t p = std::max<std::int64_t>(pmin, 3); p <= pmax; ++p) {
        if (!is_prime(p))
            continue;
        const Rational value = two_f_one_special_value(p, resolve_special_argument(arg, p));
        std::optional<TwoSquares> xy;
        if (p % 4 == 1)
            xy = two_squares_decomposition(p);
        rows.push_back({std::to_string(p), std::to_string(p % 4), xy ? std::to_string(xy->x) : dash,
                        xy ? std::to_string(xy->y) : dash, std::to_string(value.numerator()),
                        std::to_string(value.denominator())});
        doc.push_back({{"p", p},
                       {"pmod4", p % 4},
                       {"x", xy ? json(xy->x) : json()},
                       {"y", xy ? json(xy->y) : json()},
                       {"value", to_string(value)}});
    }

    if (format == Format::json)
        out << doc.dump(2) << '\n';
    else
        out << render_rows(format, {"p", "pmod4", "x", "y", "value_num", "value_den"}, rows);
    return kExitOk;
}

// isogeny -------------------------------------------------------------------

int run_isogeny(const Options &o, std::int64_t ceiling, std::ostream &out, std::ostream &err)
{
    const Format format = format_of(o);
    if (o.model != "edwards" && o.model != "weierstrass")
        throw Error(Errc::invalid_params, "isogeny --model must be edwards or weierstrass, got '" + o.model + "'");
    const auto ctx = build_field_context(parse_int(need(o.p, "--p", "isogeny"), "--p"), ceiling);
    const CurveModel source = build_model(o, *ctx);
    validate_model(source, *ctx);
    const CurveModel partner = std::holds_alternative<Edwards>(source)
                                   ? isogenous_legendre_partner(std::get<Edwards>(source), *ctx)
                                   : twisted_partner_of_weierstrass(std::get<Weierstrass>(source).a,
                                                                    std::get<Weierstrass>(source).b, *ctx);
    const std::int64_t source_total = count_points_brute(source, *ctx).total;
    const std::int64_t partner_total = count_points_brute(partner, *ctx).total;
    const bool match = source_total == partner_total;

    if (format == Format::json) {
        json doc{{"p", ctx->p()},
                 {"source", describe(source)},
                 {"source_total", source_total},
                 {"partner", describe(partner)},
                 {"partner_total", partner_total},
                 {"match", match}};
        out << doc.dump(2) << '\n';
    } else {
        out << render_rows(format, {"p", "source", "source_total", "partner", "partner_total", "match"},
                           {{std::to_string(ctx->p()), describe(source), std::to_string(source_total),
                             describe(partner), std::to_string(partner_total), match ? "true" : "false"}});
    }
    if (!match) {
        err << "mismatch: " << describe(source) << " has " << source_total << " points, " << describe(partner)
            << " has " << partner_total << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

// verify --------------------------------------------------------------------

int run_verify(const Options &o, std::int64_t ceiling, std::ostream &out, std::ostream &err)
{
    const Format format = format_of(o);
    const auto suites = parse_suite(o.suite);
    if (!suites)
        throw Error(Errc::invalid_params,
                    "unknown suite '" + o.suite + "' (thm1, thm2, cor-iso, prop1, lemmas, clausen, all)");

    ScanOptions scan;
    scan.ceiling = ceiling;
    scan.pmin = o.pmin.empty() ? 3 : parse_int(o.pmin, "--pmin");
    scan.pmax = o.pmax.empty() ? 61 : parse_int(o.pmax, "--pmax");
    check_range(scan.pmin, scan.pmax, ceiling);
    if (!o.tolerance.empty()) {
        double tol = 0.0;
        try {
            std::size_t used = 0;
            tol = std::stod(o.tolerance, &used);
            if (used != o.tolerance.size())
                tol = 0.0;
        } catch (const std::exception &) {
        }
        if (!(tol > 0.0) || !std::isfinite(tol))
            throw Error(Errc::invalid_params, "--tolerance must be a positive number, got '" + o.tolerance + "'");
        scan.tolerance = tol;
    }
    scan.jobs = std::max(1u, std::thread::hardware_concurrency());
    if (!o.jobs.empty()) {
        const auto jobs = parse_int(o.jobs, "--jobs");
        if (jobs < 1 || jobs > 1024)
            throw Error(Errc::invalid_params, "--jobs must be in [1, 1024]");
        scan.jobs = static_cast<unsigned>(jobs);
    }

    std::vector<VerificationRecord> records;
    for (Suite s : *suites) {
        auto part = run_scan(s, scan);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    const auto mismatches = std::count_if(records.begin(), records.end(), [](const auto &r) { return !r.match; });

    out << emit_report(records, format);
    // Keep machine-readable stdout parseable.
    std::ostream &summary = format == Format::table ? out : err;
    summary << "checked=" << records.size() << " mismatches=" << mismatches << '\n';
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--format", o.format, "table, json or csv")->capture_default_str();
    cmd->add_option("--unsafe-pmax", o.unsafe_pmax, "raise the prime ceiling (default 10000)");
}

} // namespace

Residue parse_field_element(const std::string &text, const FieldContext &ctx)
{
    const auto slash = text.find('/');
    const std::int64_t num = parse_int(text.substr(0, slash), "field element");
    std::int64_t den = 1;
    if (slash != std::string::npos)
        den = parse_int(text.substr(slash + 1), "field element");
    if (ctx.reduce(den) == 0)
        throw Error(Errc::zero_argument, "denominator of '" + text + "' vanishes mod " + std::to_string(ctx.p()));
    return ctx.div(ctx.reduce(num), ctx.reduce(den));
}

Character parse_character(const std::string &text, const ContextPtr &ctx)
{
    if (text == "eps")
        return trivial_character(ctx);
    if (text == "phi")
        return quadratic_character(ctx);
    std::int64_t k = 0;
    try {
        k = parse_int(text, "character");
    } catch (const Error &) {
        throw Error(Errc::invalid_params, "character must be eps, phi or an index, got '" + text + "'");
    }
    return character_by_index(ctx, k);
}

std::int64_t resolve_ceiling(const char *env_pmax, const std::string &unsafe_pmax)
{
    std::int64_t ceiling = kDefaultCeiling;
    if (!unsafe_pmax.empty())
        ceiling = parse_int(unsafe_pmax, "--unsafe-pmax");
    else if (env_pmax && *env_pmax)
        ceiling = parse_int(env_pmax, "CHARSUM_PMAX");
    if (ceiling < 3)
        throw Error(Errc::invalid_params, "prime ceiling must be at least 3");
    return ceiling;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const char *env_pmax)
{
    CLI::App app{"Gaussian hypergeometric series over F_p and point counts on Edwards-type curves",
                 "charsum-curves"};
    app.require_subcommand(1);
    Options o;

    auto *count = app.add_subcommand("count", "count F_p-points on a curve model");
    add_common(count, o);
    count->add_option("--model", o.model, "edwards, twisted, legendre, clausen or weierstrass")->required();
    count->add_option("--p", o.p, "odd prime")->required();
    count->add_option("--a", o.a);
    count->add_option("--b", o.b);
    count->add_option("--d", o.d);
    count->add_option("--lambda", o.lambda);
    count->add_option("--method", o.method, "auto, brute, formula or both")->capture_default_str();

    auto *hyper = app.add_subcommand("hyper", "evaluate a Gaussian hypergeometric series");
    add_common(hyper, o);
    hyper->add_option("--p", o.p, "odd prime")->required();
    hyper->add_option("--upper", o.upper, "A0,A1,... as eps, phi or indices")->required()->delimiter(',');
    hyper->add_option("--lower", o.lower, "B1,... as eps, phi or indices")->delimiter(',');
    hyper->add_option("--x", o.x, "argument in F_p")->required();
    hyper->add_option("--binomial", o.binomial, "direct or gauss")->capture_default_str();

    auto *special = app.add_subcommand("special-values", "closed-form 2F1(phi,phi;eps) at -1, 1/2, 2");
    add_common(special, o);
    special->add_option("--lambda", o.lambda, "-1, 1/2 or 2")->required();
    special->add_option("--p", o.p, "single prime");
    special->add_option("--pmin", o.pmin, "default 5");
    special->add_option("--pmax", o.pmax);

    auto *isogeny = app.add_subcommand("isogeny", "partner model and both point counts");
    add_common(isogeny, o);
    isogeny->add_option("--model", o.model, "edwards or weierstrass")->required();
    isogeny->add_option("--p", o.p, "odd prime")->required();
    isogeny->add_option("--a", o.a);
    isogeny->add_option("--b", o.b);

    auto *verify = app.add_subcommand("verify", "scan a prime range and compare against closed forms");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "thm1, thm2, cor-iso, prop1, lemmas, clausen or all")->required();
    verify->add_option("--pmin", o.pmin, "default 3");
    verify->add_option("--pmax", o.pmax, "default 61");
    verify->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");
    verify->add_option("--tolerance", o.tolerance, "override the suite's absolute tolerance");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        const std::int64_t ceiling = resolve_ceiling(env_pmax, o.unsafe_pmax);
        if (count->parsed())
            return run_count(o, ceiling, out, err);
        if (hyper->parsed())
            return run_hyper(o, ceiling, out);
        if (special->parsed())
            return run_special_values(o, ceiling, out);
        if (isogeny->parsed())
            return run_isogeny(o, ceiling, out, err);
        return run_verify(o, ceiling, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInvalid;
}

} // namespace charsum::cli
