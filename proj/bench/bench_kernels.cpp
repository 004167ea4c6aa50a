#include <benchmark/benchmark.h>

#include <random>

#include "ceh/parallel.hpp"

using namespace ceh;

namespace {

std::vector<QuotientPoint> points(const GeometryParams& p, int count) {
    std::mt19937_64 rng(42);
    std::vector<QuotientPoint> out;
    for (int k = 0; k < count; ++k) out.push_back(random_point(p, rng));
    return out;
}

std::vector<GeodesicState> launches(const GeometryParams& p, int count) {
    std::mt19937_64 rng(42);
    std::vector<GeodesicState> out;
    for (int k = 0; k < count; ++k) out.push_back(random_launch(p, rng));
    return out;
}

template <auto Kernel>
void verify(benchmark::State& state) {
    const GeometryParams p(static_cast<int>(state.range(0)), 1.0);
    const auto pts = points(p, 16);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(pts, p, PipelineConfig{}));
}

template <auto Kernel>
void scan(benchmark::State& state) {
    const GeometryParams p(static_cast<int>(state.range(0)), 1.0);
    const auto grid = log_grid(1e-4, 1e4, 256);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(ScanQuantity::spectrum, grid, p));
}

template <auto Kernel>
void classify(benchmark::State& state) {
    const GeometryParams p(static_cast<int>(state.range(0)), 1.0);
    const auto ls = launches(p, 8);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(ls, 20.0, 1e-10, p));
}

}  // namespace

BENCHMARK(verify<serial::verify_points>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(verify<omp::verify_points>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<serial::radial_scan>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<omp::radial_scan>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(classify<serial::classify_launches>)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(classify<omp::classify_launches>)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
