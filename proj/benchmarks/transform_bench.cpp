#include <benchmark/benchmark.h>

#include "ar1lt/ar1lt.hpp"

namespace {

using namespace ar1lt;

// Real alpha reaches an exact fixed point of the ratio recurrence quickly;
// complex alpha exercises the full walk.
void BM_TransformReal(benchmark::State& state) {
  const ModelParams p(0.6, 1.0);
  const TransformPoint point(-0.3);
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transform(p, point, 0.5, t));
}
BENCHMARK(BM_TransformReal)->RangeMultiplier(100)->Range(1, 1000000);

void BM_TransformComplex(benchmark::State& state) {
  const ModelParams p(-0.8, 1.5);
  const TransformPoint point(Complex(-0.7, 0.33));
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transform(p, point, 2.0, t));
}
BENCHMARK(BM_TransformComplex)->RangeMultiplier(100)->Range(1, 1000000);

void BM_TransformSeries(benchmark::State& state) {
  const ModelParams p(0.6, 1.0);
  const TransformPoint point(Complex(-0.3, 0.1));
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transform_series(p, point, 0.5, t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t + 1));
}
BENCHMARK(BM_TransformSeries)->Arg(100)->Arg(10000);

void BM_ErgodicConstants(benchmark::State& state) {
  const ModelParams p(0.6, 1.0);
  const TransformPoint point(-0.3);
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_constants(p, point, 0.5));
}
BENCHMARK(BM_ErgodicConstants);

}  // namespace
