#include <benchmark/benchmark.h>

#include "qhopf/bq_rep.hpp"
#include "qhopf/cocycle.hpp"
#include "qhopf/twist.hpp"
#include "qhopf/verifier.hpp"

using namespace qhopf;

static void BM_CycMul(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const CycNumber a = CycNumber(1L) + CycNumber::root_of_unity(m, 1);
    const CycNumber b = CycNumber(2L) - CycNumber::root_of_unity(m, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(9)->Arg(16)->Arg(25);

static void BM_CycInverse(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const CycNumber a = CycNumber(1L) + CycNumber::root_of_unity(m, 1);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(9)->Arg(16)->Arg(25);

static void BM_BuildAq(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_Aq(n, 1));
}
BENCHMARK(BM_BuildAq)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_QuasiCoassoc(benchmark::State& state) {
    const QuasiHopfStructure A = build_Aq(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_quasi_coassoc(A));
}
BENCHMARK(BM_QuasiCoassoc)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Pentagon(benchmark::State& state) {
    const QuasiHopfStructure A = build_Aq(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(A));
}
BENCHMARK(BM_Pentagon)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Cocycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ThreeCochain w = omega(n, CycNumber::root_of_unity(n * n, 1), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_3cocycle(w));
}
BENCHMARK(BM_Cocycle)->DenseRange(2, 5);

static void BM_Semisimple(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<DegreeOneModule> modules;
    for (int t = 0; t < n; ++t) modules.push_back(vq_module(n, 1 + n * t, 1));
    for (auto _ : state) benchmark::DoNotOptimize(check_bq_semisimple(modules));
}
BENCHMARK(BM_Semisimple)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
