#include <benchmark/benchmark.h>

#include "carlitz/carlitz.hpp"
#include "carlitz/logalg.hpp"
#include "carlitz/powersums.hpp"
#include "carlitz/vandermonde.hpp"

using namespace carlitz;

// The twisted-ring expansion materializes every tau coefficient, so its cost
// grows with q^{deg a}; the closed formulas below hit one coefficient only.
static void BM_BracketDirect(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const Poly a = Poly::theta_pow(ctx, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_direct(a, 2));
}
BENCHMARK(BM_BracketDirect)->Arg(4)->Arg(8)->Arg(10);

static void BM_BracketHyperFormula(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const Poly a = Poly::theta_pow(ctx, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_hyper_formula(a, 2));
}
BENCHMARK(BM_BracketHyperFormula)->Arg(4)->Arg(8)->Arg(16);

static void BM_PowerSumBrute(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const auto i = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(power_sum_brute(ctx, i, -1));
}
BENCHMARK(BM_PowerSumBrute)->Arg(2)->Arg(4)->Arg(6);

static void BM_HyperSumClosed(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const auto i = static_cast<unsigned>(state.range(0));
    const std::vector<HyperFactor> factors = {{1, 2}, {0, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(hyper_sum_closed(ctx, i, factors));
}
BENCHMARK(BM_HyperSumClosed)->Arg(2)->Arg(4)->Arg(8);

static void BM_HyperViaVandermonde(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const auto i = static_cast<unsigned>(state.range(0));
    const Poly a = Poly::from_ints(ctx, {1, 2, 0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperderiv_via_vandermonde(a, i, 1, 2));
}
BENCHMARK(BM_HyperViaVandermonde)->Arg(3)->Arg(4);

static void BM_SpecialPolyThakur(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(special_poly_thakur(ctx, m));
}
BENCHMARK(BM_SpecialPolyThakur)->Arg(9)->Arg(27);

static void BM_VerifyLogAlgebraicity(benchmark::State& state) {
    auto ctx = FieldCtx::make_q(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_log_algebraicity(ctx, static_cast<std::uint64_t>(state.range(0)), 27));
}
BENCHMARK(BM_VerifyLogAlgebraicity)->Arg(6)->Arg(27);

BENCHMARK_MAIN();
