#include <benchmark/benchmark.h>

#include "cli/scan.hpp"
#include "sqk/isomorphism.hpp"
#include "sqk/quartic_family.hpp"
#include "sqk/thue.hpp"

using namespace sqk;

static void BM_IsoTest(benchmark::State& state) {
    long n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(iso_test(Rat(4), Rat(n)));
        n = n % 1000 + 5;
    }
}
BENCHMARK(BM_IsoTest);

static void BM_FamilyRoots(benchmark::State& state) {
    const Rat a(Int(480), Int(119));
    for (auto _ : state) benchmark::DoNotOptimize(family_rational_roots(a));
}
BENCHMARK(BM_FamilyRoots);

static void BM_GenericRoots(benchmark::State& state) {
    const RationalPoly f = family_poly(Rat(Int(480), Int(119)));
    for (auto _ : state) benchmark::DoNotOptimize(rational_roots(f));
}
BENCHMARK(BM_GenericRoots);

static void BM_SearchBounded(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_bounded(Int(956), Int(state.range(0))));
}
BENCHMARK(BM_SearchBounded)->Arg(10)->Arg(100);

static void BM_ScanSlice(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cli::run_scan(state.range(0), 1000, 1));
}
BENCHMARK(BM_ScanSlice)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
