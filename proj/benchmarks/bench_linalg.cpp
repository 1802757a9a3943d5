#include <benchmark/benchmark.h>

#include <random>

#include "torfacet/linalg.hpp"

using namespace torfacet;

namespace {

SignMatrix boundary_like(long rows, long cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SignMatrix M;
    M.rows = rows;
    M.cols = cols;
    for (long c = 0; c < cols; ++c)
        for (int k = 0; k < 4; ++k)
            M.add(static_cast<long>(rng() % rows), c, k % 2 == 0 ? 1 : -1);
    return M;
}

}  // namespace

static void BM_SnfSparsePath(benchmark::State& state) {
    SignMatrix M = boundary_like(state.range(0), state.range(0) * 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(M));
}
BENCHMARK(BM_SnfSparsePath)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_SnfDense(benchmark::State& state) {
    IntMatrix A = IntMatrix::from_sign(boundary_like(state.range(0), state.range(0) * 2, 7));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SnfDense)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_RankQ(benchmark::State& state) {
    SignMatrix M = boundary_like(state.range(0), state.range(0) * 2, 11);
    for (auto _ : state) benchmark::DoNotOptimize(rank_over_q(M));
}
BENCHMARK(BM_RankQ)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_RankFp(benchmark::State& state) {
    SignMatrix M = boundary_like(state.range(0), state.range(0) * 2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(rank_over_fp(M, 2));
}
BENCHMARK(BM_RankFp)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
