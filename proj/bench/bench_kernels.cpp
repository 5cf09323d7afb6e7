// Serial reference vs OpenMP path for the kernels that dominate run time.
// Both paths give bit-identical results; only the wall clock differs.

#include "sfent/entropy.hpp"
#include "sfent/factors.hpp"
#include "sfent/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace sfent;

namespace {

const SplitShellModel helium(2.0, 1.18853, 2.18317);

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) ? Exec::parallel : Exec::serial;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) ? "parallel x" + std::to_string(max_threads()) : "serial");
}

void BM_pair_factor_grid(benchmark::State& state)
{
    const auto f = make_pair_factor(helium, Space::momentum, Path::analytic);
    const auto xs = linear_spaced(0.0, 10.0, 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_grid_2d(f.evaluator, xs, xs, exec_of(state)));
    label(state);
}

void BM_positivity_scan_2d(benchmark::State& state)
{
    const auto f = make_pair_factor(helium, Space::position, Path::analytic);
    const auto grid = default_scan_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(positivity_scan(f, grid, 1e-12, exec_of(state)));
    label(state);
}

void BM_numeric_pair_row(benchmark::State& state)
{
    QuadratureSpec spec;
    spec.exec = exec_of(state);
    const double row[] = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(two_electron_row(helium, Space::position, row, 1.3, spec));
    label(state);
}

void BM_pair_entropy(benchmark::State& state)
{
    QuadratureSpec spec = ReportOptions::default_2d_spec();
    spec.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_factor_entropy(helium, Space::momentum, spec));
    label(state);
}

} // namespace

BENCHMARK(BM_pair_factor_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_positivity_scan_2d)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_numeric_pair_row)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pair_entropy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
