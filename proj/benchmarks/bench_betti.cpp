#include <benchmark/benchmark.h>

#include "torfacet/corpus.hpp"
#include "torfacet/hochster.hpp"
#include "torfacet/koszul.hpp"

using namespace torfacet;

static void BM_HochsterMgon(benchmark::State& state) {
    SimplicialComplex K = mgon(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_hochster(K, Coefficients::q()));
    state.SetLabel("2^m multidegree sweep");
}
BENCHMARK(BM_HochsterMgon)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_KoszulMgon(benchmark::State& state) {
    SimplicialComplex K = mgon(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_koszul(K, Coefficients::q()));
}
BENCHMARK(BM_KoszulMgon)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_HochsterMgonThreads(benchmark::State& state) {
    SimplicialComplex K = mgon(10);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_hochster(K, Coefficients::q(),
                                                      static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HochsterMgonThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BettiOverZ(benchmark::State& state) {
    SimplicialComplex K = cut_cube_dual();
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_hochster(K, Coefficients::z()));
}
BENCHMARK(BM_BettiOverZ)->Unit(benchmark::kMillisecond);

static void BM_RandomComplexBetti(benchmark::State& state) {
    SimplicialComplex K = random_complex(static_cast<int>(state.range(0)),
                                         rat_from_string("2/5"), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_koszul(K, Coefficients::z()));
}
BENCHMARK(BM_RandomComplexBetti)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
