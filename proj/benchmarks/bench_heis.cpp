#include "heis/curvature.hpp"
#include "heis/geodesics.hpp"
#include "heis/measures.hpp"
#include "heis/mesh.hpp"
#include "heis/surfaces.hpp"

#include <benchmark/benchmark.h>

using namespace heis;

static void BM_GeodesicPoint(benchmark::State& state)
{
    const GeodesicSpec g{{0.3, -0.2, 1.0}, 0.7, 1.3};
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(geodesic_point(g, s));
        s += 1e-3;
    }
}
BENCHMARK(BM_GeodesicPoint);

static void BM_CutTime(benchmark::State& state)
{
    double h = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cut_time(h, 1.5));
        h += 1e-4;
    }
}
BENCHMARK(BM_CutTime);

static void BM_MeanCurvatureSphere(benchmark::State& state)
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(mean_curvature_char(s, 0.4, 1.2));
}
BENCHMARK(BM_MeanCurvatureSphere);

static void BM_SphereArea(benchmark::State& state)
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(area(s, n).value);
    state.SetComplexityN(n * n);
}
BENCHMARK(BM_SphereArea)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oN);

static void BM_SphereVolume(benchmark::State& state)
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(volume_enclosed(s, n).value);
}
BENCHMARK(BM_SphereVolume)->Arg(64)->Arg(256);

static void BM_Mesh(benchmark::State& state)
{
    const ImmersedPatch s = cylinder_S(1.0).plus.patch;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mesh(s, n, n).vertices.size());
}
BENCHMARK(BM_Mesh)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
