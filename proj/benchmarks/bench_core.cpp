#include "sl2geo/sl2geo.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

namespace {

using namespace sl2geo;

void BM_Exp2(benchmark::State& state)
{
    const Mat2 m = 0.7 * basis().a0 + 1.3 * basis().a1 - 0.4 * basis().a2;
    for (auto _ : state) benchmark::DoNotOptimize(exp2(m));
}
BENCHMARK(BM_Exp2);

void BM_SInt(benchmark::State& state)
{
    // one value per regime: sinh-type, series band, sine-type crossing, landing
    const double cs[] = {0.5, 1.0, 1.05, 1.4};
    const double c = cs[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(s_int(c));
}
BENCHMARK(BM_SInt)->DenseRange(0, 3);

void BM_SolveWorkedExample(benchmark::State& state)
{
    const Mat2 xi{0, -1, 1, 0}, xf{2, 1, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(solve(xi, xf));
}
BENCHMARK(BM_SolveWorkedExample)->Unit(benchmark::kMicrosecond);

void BM_SolveFan(benchmark::State& state)
{
    std::vector<Mat2> targets;
    for (int i = 0; i < 16; ++i) {
        const double c = -2.5 + 5.0 * (i + 0.5) / 16;
        targets.push_back(lift({c, 0.3 * i}, 1.2 * s_int(c)));
    }
    for (auto _ : state) {
        for (const Mat2& t : targets) benchmark::DoNotOptimize(solve(Mat2::identity(), t));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(targets.size()));
}
BENCHMARK(BM_SolveFan)->Unit(benchmark::kMicrosecond);

void BM_Factorize(benchmark::State& state)
{
    const Mat3 m = rotation_o(0.4) * reflection_i(2) * boost_h(-0.9) * rotation_o(2.1);
    for (auto _ : state) benchmark::DoNotOptimize(factorize(m));
}
BENCHMARK(BM_Factorize);

void BM_SamplePath(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(sample_path(1.12, s_int(1.12), 400));
}
BENCHMARK(BM_SamplePath)->Unit(benchmark::kMicrosecond);

} // namespace

// the packaged benchmark_main archive carries LTO objects from another compiler build
BENCHMARK_MAIN();
