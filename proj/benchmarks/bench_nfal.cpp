// SPDX-License-Identifier: Apache-2.0
// Throughput of the grid kernels at figure scale.
#include "nfal/nfal.hpp"

#include <benchmark/benchmark.h>

using namespace nfal;

namespace {

constexpr double k = kWavenumber;

Scene scene(Vec2 xs, Rect r, std::size_t n) { return {1.0, xs, {r, n, n}}; }

void cells_per_second(benchmark::State& state, std::size_t cells, std::size_t antennas)
{
    state.counters["cells"] = static_cast<double>(cells);
    state.counters["cell_antenna/s"] = benchmark::Counter(static_cast<double>(cells * antennas),
                                                          benchmark::Counter::kIsIterationInvariantRate);
}

} // namespace

// AF over an n x n grid for a 300-element row (Fig. 2 dense case)
static void BM_AmbiguityFunction(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = build_linear(300, 1200.0);
    const auto s = scene({0, 2000}, {-1000, 1000, 1200, 2800}, n);
    for (auto _ : state) {
        auto g = evaluate_af(a, s);
        benchmark::DoNotOptimize(g.values.data());
    }
    cells_per_second(state, s.grid.size(), a.size());
}
BENCHMARK(BM_AmbiguityFunction)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

// sampled spectrum of h over an m x m wavevector grid, 64 x 64 array (Fig. 4a)
static void BM_SpectrumH(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto a = build_rectangular(64, 64, 15.0, 15.0, {0.0, -7.5});
    SpectrumOptions o;
    o.m1 = o.m2 = m;
    for (auto _ : state) {
        auto s = spectrum_h(a, {0, 10}, k, o);
        benchmark::DoNotOptimize(s.magnitudes.data());
    }
    cells_per_second(state, m * m, a.size());
}
BENCHMARK(BM_SpectrumH)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

// spectrum of g in polar coordinates, 64 rings of 256 (Fig. 4b / 6b)
static void BM_SpectrumPolarG(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<double> radii;
    for (int i = 0; i < 64; ++i) radii.push_back(5.0 + 10.0 * i / 63.0);
    const auto a = build_concentric(256, kPi, radii);
    SpectrumOptions o;
    o.m1 = o.m2 = m;
    for (auto _ : state) {
        auto s = spectrum_polar_g(a, {0, 5}, {-10, 10}, k, o);
        benchmark::DoNotOptimize(s.magnitudes.data());
    }
    cells_per_second(state, m * m, a.size());
}
BENCHMARK(BM_SpectrumPolarG)->Arg(64)->Unit(benchmark::kMillisecond);

// AFR mask of a 168-element row (Fig. 7b) on an n x n grid
static void BM_AfrLinear(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = build_linear(168, 800.0);
    const auto s = scene({0, 400}, {-1000, 1000, 20, 1620}, n);
    for (auto _ : state) {
        auto m = afr(a, s);
        benchmark::DoNotOptimize(m.bits.data());
    }
    cells_per_second(state, s.grid.size(), a.size());
}
BENCHMARK(BM_AfrLinear)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// AFR of the 84 x 84 planar array (Fig. 7f), two aliasing axes
static void BM_AfrPlanar(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = build_rectangular(84, 84, 400.0, 400.0, {0.0, -200.0});
    const auto s = scene({0, 1000}, {-1000, 1000, 200, 1800}, n);
    for (auto _ : state) {
        auto m = afr(a, s);
        benchmark::DoNotOptimize(m.bits.data());
    }
    cells_per_second(state, s.grid.size(), a.size());
}
BENCHMARK(BM_AfrPlanar)->Arg(50)->Unit(benchmark::kMillisecond);

// polar AFR of the full 384-element circle (Fig. 8d)
static void BM_AfrCircular(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = build_circular(384, kTwoPi, 100.0);
    const auto s = scene({-20, -20}, {-150, 150, -150, 150}, n);
    for (auto _ : state) {
        auto m = afr(a, s);
        benchmark::DoNotOptimize(m.bits.data());
    }
    cells_per_second(state, s.grid.size(), a.size());
}
BENCHMARK(BM_AfrCircular)->Arg(150)->Unit(benchmark::kMillisecond);

// Removal check: two AFRs plus CAE sets on the boundary
static void BM_CheckRemoval(benchmark::State& state)
{
    const auto d = build_linear(248, 800.0 / 167.0 * 247.0);
    std::vector<std::size_t> idx;
    for (std::size_t i = 40; i < 208; ++i) idx.push_back(i);
    const auto b = select(d, idx);
    const auto s = scene({0, 400}, {-1000, 1000, 20, 1620}, 100);
    for (auto _ : state) {
        auto r = check_removal(d, b, s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CheckRemoval)->Unit(benchmark::kMillisecond);

// Marching squares on a circular blob
static void BM_MarchingSquares(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const GridSpec g{{-1, 1, -1, 1}, n, n};
    std::vector<std::uint8_t> bits(g.size());
    for (std::size_t c = 0; c < g.size(); ++c) bits[c] = norm(g.center(c)) < 0.7 ? 1 : 0;
    for (auto _ : state) {
        auto lines = marching_squares(g, bits);
        benchmark::DoNotOptimize(lines.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_MarchingSquares)->Arg(256)->Arg(1024);

// Exact loci scan plus bisection along a 400λ line
static void BM_ExactLoci(benchmark::State& state)
{
    const auto samples = static_cast<std::size_t>(state.range(0));
    const auto line = SamplingCurve::line({-200.0, 0.0}, {200.0, 0.0});
    for (auto _ : state) {
        auto r = exact_loci({0.5, 9.5}, {0, 10}, k, Axis::x, line, samples);
        benchmark::DoNotOptimize(r.roots.data());
    }
}
BENCHMARK(BM_ExactLoci)->Arg(4096)->Arg(65536);

BENCHMARK_MAIN();
