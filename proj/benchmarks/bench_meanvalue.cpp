#include <benchmark/benchmark.h>

#include "fqlab/meanvalue.hpp"

using namespace fqlab;

static void BM_JsNaive(benchmark::State& st) {
  const auto F = make_field(2);
  const unsigned N = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(js_naive(F, {1, 2}, 2, N));
}
BENCHMARK(BM_JsNaive)->Arg(2)->Arg(3)->Arg(4);

static void BM_JsHistogram(benchmark::State& st) {
  const auto F = make_field(2);
  const unsigned N = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(js_histogram(F, {1, 2}, 2, N));
}
BENCHMARK(BM_JsHistogram)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

static void BM_JsHistogramCubic(benchmark::State& st) {
  const auto F = make_field(3);
  const unsigned s = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(js_histogram(F, {1, 2, 3}, s, 3));
}
BENCHMARK(BM_JsHistogramCubic)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
