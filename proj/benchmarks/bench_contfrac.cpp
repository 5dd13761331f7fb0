#include <benchmark/benchmark.h>

#include "fqlab/contfrac.hpp"

using namespace fqlab;

static void BM_CfExpandSeries(benchmark::State& st) {
  const auto F = make_field(3);
  const KElem alpha(random_series(F, -static_cast<long>(st.range(0)), 5));
  for (auto _ : st) benchmark::DoNotOptimize(cf_expand(alpha, 4096));
}
BENCHMARK(BM_CfExpandSeries)->Arg(64)->Arg(256);

static void BM_RationalityProbe(benchmark::State& st) {
  const auto F = make_field(2);
  const KElem alpha(kernel_element(F, -200, 3));
  std::vector<unsigned> Ns;
  for (unsigned N = 1; N <= 60; ++N) Ns.push_back(N);
  for (auto _ : st) benchmark::DoNotOptimize(rationality_probe(alpha, Kappa{3, 2}, Ns));
}
BENCHMARK(BM_RationalityProbe);

BENCHMARK_MAIN();
