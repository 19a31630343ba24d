#include <benchmark/benchmark.h>

#include "omega/catalog.hpp"
#include "omega/omega.hpp"
#include "omega/oracle.hpp"

using namespace omega;

namespace {

void eliminate(benchmark::State& state, const ElliottRational& in, Mode mode) {
    EliminationStrategy strategy;
    strategy.mode = mode;
    for (auto _ : state) benchmark::DoNotOptimize(omega_eliminate_all(in, strategy));
}

void BM_Fundamentals(benchmark::State& state) {
    auto entries = fundamentals(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& e : entries) benchmark::DoNotOptimize(omega_eliminate_all(e.input()));
}
BENCHMARK(BM_Fundamentals)->DenseRange(1, 5);

void BM_ThreeFactorDirect(benchmark::State& state) {
    eliminate(state, three_factor_example().input(), Mode::direct);
}
BENCHMARK(BM_ThreeFactorDirect);

void BM_ThreeFactorDual(benchmark::State& state) { eliminate(state, three_factor_example().input(), Mode::dual); }
BENCHMARK(BM_ThreeFactorDual);

void BM_FourLambda(benchmark::State& state) { eliminate(state, four_lambda_entry().input(), Mode::automatic); }
BENCHMARK(BM_FourLambda);

void BM_Kgon(benchmark::State& state) {
    eliminate(state, kgon_input(static_cast<int>(state.range(0))), Mode::automatic);
}
BENCHMARK(BM_Kgon)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_Han(benchmark::State& state) {
    eliminate(state, han_entry(static_cast<int>(state.range(0)), 3, 2).input(), Mode::automatic);
}
BENCHMARK(BM_Han)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Hard(benchmark::State& state) {
    eliminate(state, hard_input(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))), Mode::automatic);
}
BENCHMARK(BM_Hard)->ArgsProduct({{1, 2, 3}, {0, 3}})->Unit(benchmark::kMillisecond);

void BM_OracleExpand(benchmark::State& state) {
    auto out = omega_eliminate_all(kgon_input(4)).first;
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand(out, d));
}
BENCHMARK(BM_OracleExpand)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
