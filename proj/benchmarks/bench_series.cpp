#include <benchmark/benchmark.h>

#include "modlat/modforms.hpp"
#include "modlat/series_catalog.hpp"

using namespace modlat;

static void BM_Delta16Power6(benchmark::State& state) {
    const long prec = state.range(0);
    RationalSeries d = delta16(prec);
    for (auto _ : state) {
        RationalSeries p = d.pow(6);
        benchmark::DoNotOptimize(p.coeff(14));
    }
}
BENCHMARK(BM_Delta16Power6)->Arg(64)->Arg(128)->Arg(256);

static void BM_ExtremalTheta48(benchmark::State& state) {
    for (auto _ : state) {
        RationalSeries f = extremal_theta(48, 24);
        benchmark::DoNotOptimize(f.coeff(8));
    }
}
BENCHMARK(BM_ExtremalTheta48);

static void BM_CuspBasis26(benchmark::State& state) {
    const long prec = state.range(0);
    for (auto _ : state) {
        EchelonBasis basis = cusp_basis(26, prec);
        benchmark::DoNotOptimize(basis.forms[0].coeff(12));
    }
}
BENCHMARK(BM_CuspBasis26)->Arg(40)->Arg(120);

static void BM_EigenSplit(benchmark::State& state) {
    for (auto _ : state) {
        EigenSplit split = eigen_split_weight26(200);
        benchmark::DoNotOptimize(split.trace);
    }
}
BENCHMARK(BM_EigenSplit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
