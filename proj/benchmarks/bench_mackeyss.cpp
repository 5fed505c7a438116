#include "mackeyss/bredon.hpp"
#include "mackeyss/homalg.hpp"
#include "mackeyss/slice.hpp"

#include <benchmark/benchmark.h>

using namespace mss;

static void BM_Pi3(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pi3(n));
}
BENCHMARK(BM_Pi3)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_AssembleE2(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_E2(n));
}
BENCHMARK(BM_AssembleE2)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ApplyDifferentials(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    Page e2 = assemble_E2(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_differentials(e2));
}
BENCHMARK(BM_ApplyDifferentials)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_OrbitCount(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int k = 1; k <= n; ++k)
            benchmark::DoNotOptimize(orbit_count(n, 3, k));
}
BENCHMARK(BM_OrbitCount)->DenseRange(2, 6);

static void BM_HomologyClosedForm(benchmark::State& state)
{
    RepSum w = RepSum::parse(3, "3s + l2 + l1");
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_closed_form(w));
}
BENCHMARK(BM_HomologyClosedForm);

static void BM_HomologyCellular(benchmark::State& state)
{
    RepSum w = RepSum::parse(3, "3s + l2 + l1");
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_cellular_oracle(w));
}
BENCHMARK(BM_HomologyCellular)->Unit(benchmark::kMillisecond);

static void BM_ExtB(benchmark::State& state)
{
    int k = static_cast<int>(state.range(0));
    MackeyFunctor b = make_B(1, k - 1, k);
    for (auto _ : state)
        benchmark::DoNotOptimize(ext(b, b, 1));
}
BENCHMARK(BM_ExtB)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_NonsplitB2(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    ShortExactSequence s = ses_B2(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_nonsplit(s));
}
BENCHMARK(BM_NonsplitB2)->DenseRange(2, 5);

BENCHMARK_MAIN();
