#include <charsum/curves.hpp>

#include <benchmark/benchmark.h>

using namespace charsum;

static void BM_CountBrute(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points_brute(Edwards{2}, *ctx));
        benchmark::DoNotOptimize(count_points_brute(TwistedEdwards{1, 3}, *ctx));
    }
}
BENCHMARK(BM_CountBrute)->Arg(199)->Arg(997)->Arg(9973);

static void BM_CountFormula(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points_formula(Edwards{2}, *ctx));
        benchmark::DoNotOptimize(count_points_formula(TwistedEdwards{1, 3}, *ctx));
    }
}
BENCHMARK(BM_CountFormula)->Arg(199)->Arg(997)->Arg(9973);

static void BM_ClausenCheck(benchmark::State &state)
{
    auto ctx = build_field_context(state.range(0));
    const auto series = clausen_series(ctx);
    Residue lambda = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(clausen_identity_check(lambda, series));
        lambda = lambda + 2 < ctx->p() ? lambda + 1 : 1;
    }
}
BENCHMARK(BM_ClausenCheck)->Arg(61)->Arg(199);
