#include "cdvwall/arrangement.hpp"
#include "cdvwall/bps.hpp"
#include "cdvwall/restriction.hpp"

#include <benchmark/benchmark.h>

using namespace cdvwall;

static void BM_RootsE8(benchmark::State& state) {
    auto d = build_diagram(Family::E, 8, false);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(d).positive_roots.size());
}
BENCHMARK(BM_RootsE8);

static void BM_RestrictedRootsE7(benchmark::State& state) {
    DynkinType t(build_diagram(Family::E, 7, false), {1, 3, 5});
    for (auto _ : state) benchmark::DoNotOptimize(restricted_roots(t).size());
}
BENCHMARK(BM_RestrictedRootsE7);

static void BM_GcdSweepE8(benchmark::State& state) {
    auto d = build_diagram(Family::E, 8, false);
    auto subsets = proper_subsets(*d);
    for (auto _ : state) {
        std::size_t v = 0;
        for (std::size_t k = 0; k < subsets.size(); k += 16) v += check_gcd_closure(DynkinType(d, subsets[k])).violations.size();
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GcdSweepE8)->Unit(benchmark::kMillisecond);

static void BM_Chambers(benchmark::State& state) {
    DynkinType t(build_diagram(Family::D, 4, true), {1, 3});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(t, static_cast<std::size_t>(state.range(0))).chambers.size());
}
BENCHMARK(BM_Chambers)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Orbits(benchmark::State& state) {
    DynkinType t(build_diagram(Family::D, 4, true), {1});
    SymmetryConfig cfg;
    cfg.rigidified = true;
    cfg.non_flop = {0, 3, 4};
    cfg.window = {4, 2};
    for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(t, cfg).orbits.size());
}
BENCHMARK(BM_Orbits)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
