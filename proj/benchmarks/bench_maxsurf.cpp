#include <benchmark/benchmark.h>

#include <numbers>

#include "maxsurf/elliptic.hpp"
#include "maxsurf/flux.hpp"
#include "maxsurf/surface.hpp"

namespace {

void BM_CompleteK(benchmark::State& state) {
  double a = 0.6;
  for (auto _ : state) benchmark::DoNotOptimize(maxsurf::complete_K(a));
}
BENCHMARK(BM_CompleteK);

void BM_Arcsn(benchmark::State& state) {
  double s = 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(maxsurf::arcsn(s, 0.6));
}
BENCHMARK(BM_Arcsn);

void BM_JacobiSn(benchmark::State& state) {
  double u = 1.3;
  for (auto _ : state) benchmark::DoNotOptimize(maxsurf::jacobi_sn(u, 0.6));
}
BENCHMARK(BM_JacobiSn);

void BM_Height(benchmark::State& state) {
  const auto fam = maxsurf::SurfaceFamily::from_alpha(0.6);
  double x = 1.0, y = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(fam.height(x, y));
}
BENCHMARK(BM_Height);

void BM_HeightLongDouble(benchmark::State& state) {
  const auto fam = maxsurf::SurfaceFamily::from_alpha(0.6);
  long double x = 1.0L, y = 0.5L;
  for (auto _ : state) benchmark::DoNotOptimize(fam.height_as(x, y));
}
BENCHMARK(BM_HeightLongDouble);

void BM_PdeResidual(benchmark::State& state) {
  const auto fam = maxsurf::SurfaceFamily::from_alpha(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(fam.pde_residual(1.0, 0.5));
}
BENCHMARK(BM_PdeResidual);

void BM_FluxCircle(benchmark::State& state) {
  const auto fam = maxsurf::SurfaceFamily::from_alpha(0.6);
  const auto field = maxsurf::surface_gradient_field(fam);
  const auto contour = maxsurf::Contour::circle({0, 0}, 0.7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maxsurf::flux_integral(field, contour));
}
BENCHMARK(BM_FluxCircle)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
