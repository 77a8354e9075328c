#include <benchmark/benchmark.h>

#include "sl2/multiplier.hpp"
#include "sl2/transform.hpp"
#include "sl2/zeta_table.hpp"

using namespace sl2;

namespace {

std::vector<double> t_grid(int points) { return uniform_grid(0.0, 5.0, points); }

void BM_ZetaTableOpenMP(benchmark::State& state) {
    auto t = t_grid(static_cast<int>(state.range(0)));
    auto l = default_lambda_grid(60.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_table(HalfInt(1.0), t, l, Backend::OpenMP));
    state.SetItemsProcessed(state.iterations() * t.size() * l.size());
}

void BM_ZetaTableSerial(benchmark::State& state) {
    auto t = t_grid(static_cast<int>(state.range(0)));
    auto l = default_lambda_grid(60.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_table(HalfInt(1.0), t, l, Backend::Serial));
    state.SetItemsProcessed(state.iterations() * t.size() * l.size());
}

void BM_ZetaTableReference(benchmark::State& state) {
    auto t = t_grid(static_cast<int>(state.range(0)));
    auto l = default_lambda_grid(60.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_table_reference(HalfInt(1.0), t, l));
    state.SetItemsProcessed(state.iterations() * t.size() * l.size());
}

void BM_KernelSynthesis(benchmark::State& state) {
    Backend backend = state.range(0) ? Backend::OpenMP : Backend::Serial;
    KernelSpec spec;
    spec.backend = backend;
    auto t = uniform_grid(0.0, 10.0, 401);
    Multiplier m = Multiplier::heat(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_kernel(m, HalfInt(0.0), t, 0.0, spec));
}

} // namespace

BENCHMARK(BM_ZetaTableOpenMP)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaTableSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaTableReference)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSynthesis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
