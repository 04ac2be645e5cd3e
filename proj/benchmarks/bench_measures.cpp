#include <benchmark/benchmark.h>

#include "gme/closedform.hpp"
#include "gme/measures.hpp"
#include "gme/states.hpp"
#include "gme/sweep.hpp"
#include "gme/tensorlinalg.hpp"

static void FullReportGhz(benchmark::State &state) {
    const auto psi = gme::make_ghz(static_cast<int>(state.range(0)));
    for(auto _ : state) benchmark::DoNotOptimize(gme::full_report(psi));
    state.counters["cuts"] = static_cast<double>((1u << (state.range(0) - 1)) - 1);
}
BENCHMARK(FullReportGhz)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void FullReportGhzThreads(benchmark::State &state) {
    const auto psi = gme::make_ghz(12);
    const gme::ReportOptions opts{gme::Regularization::Regularized, static_cast<unsigned>(state.range(0))};
    for(auto _ : state) benchmark::DoNotOptimize(gme::full_report(psi, opts));
}
BENCHMARK(FullReportGhzThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

// Balanced cut of an n-qubit W state: a 2^(n/2) x 2^(n/2) SVD.
static void SchmidtBalancedCut(benchmark::State &state) {
    const int n    = static_cast<int>(state.range(0));
    const auto psi = gme::make_w(n);
    const auto cut = gme::make_bipartition(n, (1u << (n / 2)) - 1);
    for(auto _ : state) benchmark::DoNotOptimize(gme::schmidt_spectrum(psi, cut));
}
BENCHMARK(SchmidtBalancedCut)->DenseRange(4, 14, 2);

static void ClosedFormGbcW(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for(auto _ : state) benchmark::DoNotOptimize(gme::closed_form::gbc_w(n));
}
BENCHMARK(ClosedFormGbcW)->Arg(8)->Arg(20)->Arg(64);

static void SweepFamilyC(benchmark::State &state) {
    gme::sweep::SweepSpec spec;
    spec.family = gme::sweep::Family::C;
    spec.steps  = static_cast<int>(state.range(0));
    for(auto _ : state) benchmark::DoNotOptimize(gme::sweep::run_sweep(spec));
}
BENCHMARK(SweepFamilyC)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
