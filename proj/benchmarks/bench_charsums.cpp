#include <charsum/charsums.hpp>

#include <benchmark/benchmark.h>

using namespace charsum;

static void BM_FieldContext(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_field_context(state.range(0)));
}
BENCHMARK(BM_FieldContext)->Arg(61)->Arg(997)->Arg(9973);

// Full n x n binomial table, direct Jacobi sums vs the Gauss-sum route.
static void BM_BinomialTable(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    const auto method = state.range(1) ? BinomialMethod::gauss : BinomialMethod::direct;
    for (auto _ : state)
        benchmark::DoNotOptimize(BinomialTable(ctx, method).at(1, 2));
    state.SetLabel(state.range(1) ? "gauss" : "direct");
}
BENCHMARK(BM_BinomialTable)->ArgsProduct({{61, 199}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_SeriesBuild(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    const auto eps = trivial_character(ctx), phi = quadratic_character(ctx);
    const auto method = state.range(1) ? BinomialMethod::gauss : BinomialMethod::direct;
    for (auto _ : state)
        benchmark::DoNotOptimize(HypergeometricSeries({phi, phi, phi}, {eps, eps}, method));
    state.SetLabel(state.range(1) ? "gauss" : "direct");
}
BENCHMARK(BM_SeriesBuild)->ArgsProduct({{61, 199, 997}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_SeriesEval(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    const auto eps = trivial_character(ctx), phi = quadratic_character(ctx);
    const HypergeometricSeries series({phi, phi}, {eps}, BinomialMethod::gauss);
    Residue x = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(series(x));
        x = x + 1 < ctx->p() ? x + 1 : 2;
    }
}
BENCHMARK(BM_SeriesEval)->Arg(199)->Arg(997);

static void BM_ExactTrace(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(two_f_one_quadratic_exact(*ctx, 2));
}
BENCHMARK(BM_ExactTrace)->Arg(199)->Arg(997)->Arg(9973);
