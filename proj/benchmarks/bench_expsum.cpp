#include <benchmark/benchmark.h>

#include "fqlab/equidist.hpp"
#include "fqlab/expsum.hpp"

using namespace fqlab;

namespace {

ExpPoly cubic(unsigned N) {
  auto F = make_field(2);
  ExpPoly f(F);
  f.set(1, KElem::zero(F));
  f.set(3, KElem::zero(F));
  const long floor = f.default_floor(N);
  f.set(1, KElem(random_series(F, floor, 1)));
  f.set(3, KElem(random_series(F, floor, 2)));
  return f;
}

}  // namespace

static void BM_WeylSumTable(benchmark::State& st) {
  const unsigned N = static_cast<unsigned>(st.range(0));
  const ExpPoly f = cubic(N);
  for (auto _ : st) benchmark::DoNotOptimize(weyl_sum(f, N, {}, EvalStrategy::Table));
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << N));
}
BENCHMARK(BM_WeylSumTable)->DenseRange(8, 16, 4);

static void BM_WeylSumDirect(benchmark::State& st) {
  const unsigned N = static_cast<unsigned>(st.range(0));
  const ExpPoly f = cubic(N);
  for (auto _ : st) benchmark::DoNotOptimize(weyl_sum(f, N, {}, EvalStrategy::Direct));
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << N));
}
BENCHMARK(BM_WeylSumDirect)->DenseRange(8, 16, 4);

static void BM_WeylSumThreads(benchmark::State& st) {
  const unsigned N = 18;
  const ExpPoly f = cubic(N);
  const RunOptions opts{kDefaultBudget, static_cast<unsigned>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(weyl_sum(f, N, opts));
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << N));
}
BENCHMARK(BM_WeylSumThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_CylinderCounts(benchmark::State& st) {
  const unsigned N = 14, d = static_cast<unsigned>(st.range(0));
  ExpPoly f = cubic(N + d);
  for (auto _ : st) benchmark::DoNotOptimize(cylinder_counts(f, N, d));
}
BENCHMARK(BM_CylinderCounts)->Arg(1)->Arg(3)->Arg(6);

static void BM_WeylScan(benchmark::State& st) {
  const unsigned N = static_cast<unsigned>(st.range(0));
  const ExpPoly f = cubic(N + 4);
  for (auto _ : st) benchmark::DoNotOptimize(weyl_scan(f, {N}, 3));
}
BENCHMARK(BM_WeylScan)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
