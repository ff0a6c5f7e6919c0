#include <benchmark/benchmark.h>

#include "hhl/bijections.hpp"
#include "hhl/macdonald.hpp"

using namespace hhl;

static void BM_MacdonaldPolynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Partition shape = partitions_of(n)[1];
    for (auto _ : state) benchmark::DoNotOptimize(macdonald_polynomial(shape, {n}, 1));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * filling_count(n, n)));
}
BENCHMARK(BM_MacdonaldPolynomial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Factorization(benchmark::State& state) {
    const ShapeSpec spec(Partition({2, 2}), 1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_factorization(spec, {7}, 1));
}
BENCHMARK(BM_Factorization)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& state) {
    const TailShape ts(Partition({2}), 2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(ts, {5}, 1));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Tau(benchmark::State& state) {
    const Filling t = Filling::from_top_down({{1, 4}, {3, 5}, {2, 6}, {1, 3}, {2, 4}, {3, 3, 3}, {4, 4, 4}});
    const TailShape ts(Partition({3, 3}), 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(tau(t, ts));
}
BENCHMARK(BM_Tau);

BENCHMARK_MAIN();
