#include <benchmark/benchmark.h>

#include "tabcurv/curvature.hpp"
#include "tabcurv/metric.hpp"
#include "tabcurv/spacetime.hpp"
#include "tabcurv/young.hpp"

using namespace tabcurv;

static void BM_RingMultiply(benchmark::State& state) {
  const auto y = young_symmetrizer(parse_tableau("1,3;2,4"));
  for (auto _ : state) benchmark::DoNotOptimize(y * y);
}
BENCHMARK(BM_RingMultiply);

static void BM_ApplyOperator(benchmark::State& state) {
  SplitMix64 rng(1);
  const auto t = random_tensor(4, static_cast<std::size_t>(state.range(0)), rng);
  const auto& e = curvature_projector();
  for (auto _ : state) benchmark::DoNotOptimize(apply_operator(e, t));
}
BENCHMARK(BM_ApplyOperator)->Arg(2)->Arg(3)->Arg(4);

static void BM_GammaSpanRank(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_span_rank(4, 40, FormGenerator::gamma, kDefaultSeed));
  }
}
BENCHMARK(BM_GammaSpanRank)->Unit(benchmark::kMillisecond);

static void BM_ProductSpanRank(benchmark::State& state) {
  const auto zeta = make_zeta(-1);
  for (auto _ : state) benchmark::DoNotOptimize(product_generator_span_rank(zeta, {}));
}
BENCHMARK(BM_ProductSpanRank)->Unit(benchmark::kMillisecond);

static void BM_PointFrame(benchmark::State& state) {
  const auto m = make_metric("langevin");
  for (auto _ : state) benchmark::DoNotOptimize(build_point_frame(m, m.default_point));
}
BENCHMARK(BM_PointFrame)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
