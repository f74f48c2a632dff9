// Serial reference vs OpenMP kernels. Sizes are the truncation M.

#include <benchmark/benchmark.h>

#include "szego/ortho_poly.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"
#include "szego/triangular.hpp"

using namespace szego;

namespace {

void reconstruct_parallel(benchmark::State& s) {
  const auto g = random_field(7, Index(s.range(0)), 0.8);
  for (auto _ : s) benchmark::DoNotOptimize(reconstruct_moments(g, g.size()));
}
void reconstruct_serial(benchmark::State& s) {
  const auto g = random_field(7, Index(s.range(0)), 0.8);
  for (auto _ : s) benchmark::DoNotOptimize(serial::reconstruct_moments(g, g.size()));
}

void extract_parallel(benchmark::State& s) {
  const auto k = reconstruct_moments(random_field(7, Index(s.range(0)), 0.5), Index(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(extract_gamma(k));
}
void extract_serial(benchmark::State& s) {
  const auto k = reconstruct_moments(random_field(7, Index(s.range(0)), 0.5), Index(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(serial::extract_gamma(k));
}

void polys_parallel(benchmark::State& s) {
  const Index m = Index(s.range(0));
  const auto g = random_field(7, m, 0.8);
  for (auto _ : s) benchmark::DoNotOptimize(build_polys(g, m / 2, m / 2 - 1));
}
void polys_serial(benchmark::State& s) {
  const Index m = Index(s.range(0));
  const auto g = random_field(7, m, 0.8);
  for (auto _ : s) benchmark::DoNotOptimize(serial::build_polys(g, m / 2, m / 2 - 1));
}

void determinants_parallel(benchmark::State& s) {
  const auto k = random_kernel(7, Index(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(determinant_table(k));
}
void determinants_serial(benchmark::State& s) {
  const auto k = random_kernel(7, Index(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(serial::determinant_table(k));
}

void convergence_parallel(benchmark::State& s) {
  const Index m = Index(s.range(0));
  const auto g = random_field(7, m, 0.3);
  const auto k = reconstruct_moments(g, m);
  for (auto _ : s) benchmark::DoNotOptimize(convergence_report(g, k, m - 9, 8));
}
void convergence_serial(benchmark::State& s) {
  const Index m = Index(s.range(0));
  const auto g = random_field(7, m, 0.3);
  const auto k = reconstruct_moments(g, m);
  for (auto _ : s) benchmark::DoNotOptimize(serial::convergence_report(g, k, m - 9, 8));
}

}  // namespace

BENCHMARK(reconstruct_parallel)->Arg(64)->Arg(128)->Arg(256)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(reconstruct_serial)->Arg(64)->Arg(128)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(extract_parallel)->Arg(32)->Arg(64)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(extract_serial)->Arg(32)->Arg(64)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(polys_parallel)->Arg(64)->Arg(128)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(polys_serial)->Arg(64)->Arg(128)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(determinants_parallel)->Arg(32)->Arg(64)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(determinants_serial)->Arg(32)->Arg(64)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(convergence_parallel)->Arg(48)->Arg(96)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(convergence_serial)->Arg(48)->Arg(96)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
