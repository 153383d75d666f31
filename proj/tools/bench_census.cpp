// Serial reference vs OpenMP-parallel kernels on the 12-vertex censuses.
#include <benchmark/benchmark.h>

#include "semc/catalog.hpp"
#include "semc/enumerate.hpp"
#include "semc/isomorphism.hpp"

using namespace semc;

namespace {

void enumerate_with_jobs(benchmark::State& state, const char* type, int jobs) {
    FaceSequence t = FaceSequence::parse(type);
    for (auto _ : state) {
        CensusResult r = enumerate_sems(t, 12, {std::nullopt, jobs});
        benchmark::DoNotOptimize(r.representatives.data());
        if (!r.complete) state.SkipWithError("incomplete search");
    }
}

void bench_enumerate_344_serial(benchmark::State& state) {
    enumerate_with_jobs(state, "3,4,4,4,4", 1);
}
void bench_enumerate_344_parallel(benchmark::State& state) {
    enumerate_with_jobs(state, "3,4,4,4,4", static_cast<int>(state.range(0)));
}
void bench_enumerate_33434_serial(benchmark::State& state) {
    enumerate_with_jobs(state, "3,3,3,4,3,4", 1);
}
void bench_enumerate_33434_parallel(benchmark::State& state) {
    enumerate_with_jobs(state, "3,3,3,4,3,4", static_cast<int>(state.range(0)));
}

void bench_canonical_form_serial(benchmark::State& state) {
    auto maps = load_catalog(SEMC_CATALOG_DIR);
    for (auto _ : state)
        for (const MapFile& mf : maps) {
            CanonicalForm cf = canonical_form(mf.map);
            benchmark::DoNotOptimize(cf.faces.data());
        }
}

void bench_canonical_form_parallel(benchmark::State& state) {
    auto maps = load_catalog(SEMC_CATALOG_DIR);
    for (auto _ : state)
        for (const MapFile& mf : maps) {
            CanonicalForm cf = canonical_form_parallel(mf.map);
            benchmark::DoNotOptimize(cf.faces.data());
        }
}

}  // namespace

BENCHMARK(bench_enumerate_344_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumerate_344_parallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumerate_33434_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_enumerate_33434_parallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_canonical_form_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_canonical_form_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
