#include <benchmark/benchmark.h>

#include "modlat/lattice.hpp"
#include "modlat/prover.hpp"

using namespace modlat;

static void BM_ShellEnumD4(benchmark::State& state) {
    Lattice d4 = Lattice::builtin("d4");
    for (auto _ : state) {
        Shell sh = shell_enum(d4, state.range(0));
        benchmark::DoNotOptimize(sh.reps.size());
    }
}
BENCHMARK(BM_ShellEnumD4)->Arg(2)->Arg(8);

static void BM_ShellEnumBW16(benchmark::State& state) {
    Lattice bw = Lattice::builtin("bw16");
    for (auto _ : state) {
        Shell sh = shell_enum(bw, state.range(0));
        benchmark::DoNotOptimize(sh.reps.size());
    }
}
BENCHMARK(BM_ShellEnumBW16)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_WeightedThetaBW16(benchmark::State& state) {
    Lattice bw = Lattice::builtin("bw16");
    Coord xp(16, 0);
    xp[1] = 1;
    for (auto _ : state) {
        RationalSeries t = weighted_theta_direct(bw, xp, 8, 7);
        benchmark::DoNotOptimize(t.coeff(6));
    }
}
BENCHMARK(BM_WeightedThetaBW16)->Unit(benchmark::kMillisecond);

static void BM_VerifyCase(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Certificate cert = verify_case(rank);
        benchmark::DoNotOptimize(cert.proven);
    }
}
BENCHMARK(BM_VerifyCase)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
