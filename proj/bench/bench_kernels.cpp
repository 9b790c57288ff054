// Serial reference against OpenMP version for each parallel kernel.

#include <benchmark/benchmark.h>

#include "crn/bundles.hpp"
#include "crn/classify.hpp"
#include "crn/dynamics.hpp"
#include "crn/realize.hpp"

using namespace crn;

namespace {

const ExampleBundle& ex(const char* name) { return example_bundle(name); }

void BM_SweepSerial(benchmark::State& state) {
  const auto net = ex("ex3d").full_system().network();
  for (auto _ : state) benchmark::DoNotOptimize(is_endotactic_serial(net).holds);
}
void BM_SweepParallel(benchmark::State& state) {
  const auto net = ex("ex3d").full_system().network();
  for (auto _ : state) benchmark::DoNotOptimize(is_endotactic(net).holds);
}

void BM_WrSerial(benchmark::State& state) {
  const auto& b = ex("ex1");
  const auto c = newton_polytope_candidates(b.full_field, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wr_realizable_on_serial(b.full_field, c, b.species).realizable);
}
void BM_WrParallel(benchmark::State& state) {
  const auto& b = ex("ex1");
  const auto c = newton_polytope_candidates(b.full_field, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wr_realizable_on(b.full_field, c, b.species).realizable);
}

void BM_CurveSerial(benchmark::State& state) {
  const auto& b = ex("ex3d");
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::sample_steady_curve_serial(b.scalar, b.box, 30).points.size());
}
void BM_CurveParallel(benchmark::State& state) {
  const auto& b = ex("ex3d");
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::sample_steady_curve(b.scalar, b.box, 30).points.size());
}

void BM_GridSerial(benchmark::State& state) {
  const auto& b = ex("ex2");
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::phase_portrait_grid_serial(b.full_field, b.box, 200).size());
}
void BM_GridParallel(benchmark::State& state) {
  const auto& b = ex("ex2");
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::phase_portrait_grid(b.full_field, b.box, 200).size());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WrSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WrParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurveParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
