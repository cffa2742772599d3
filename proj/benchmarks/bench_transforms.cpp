#include <benchmark/benchmark.h>

#include "satqubo/cnf.hpp"
#include "satqubo/qubo.hpp"
#include "satqubo/transforms.hpp"

namespace {

using namespace satqubo;

const CnfFormula& benchmark_formula() {
  static const CnfFormula f = generate_instance(11, 46, 7, false);
  return f;
}

void BM_ChancellorTransform(benchmark::State& state) {
  const CnfFormula& f = benchmark_formula();
  const double coupling = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chancellor_transform(f, coupling));
  }
}
BENCHMARK(BM_ChancellorTransform)->Arg(1)->Arg(5);

void BM_NuessleinTransform(benchmark::State& state) {
  const CnfFormula& f = benchmark_formula();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuesslein_transform(f));
  }
}
BENCHMARK(BM_NuessleinTransform);

void BM_ChoiTransform(benchmark::State& state) {
  const CnfFormula& f = benchmark_formula();
  for (auto _ : state) {
    benchmark::DoNotOptimize(choi_transform(f));
  }
}
BENCHMARK(BM_ChoiTransform);

void BM_ModifiedChancellorTransform(benchmark::State& state) {
  const CnfFormula& f = benchmark_formula();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        modified_chancellor_transform(f, 1.0, kDefaultMultipliers, 3));
  }
}
BENCHMARK(BM_ModifiedChancellorTransform);

void BM_AutoScale(benchmark::State& state) {
  const Qubo q = chancellor_transform(benchmark_formula(), 5.0).qubo;
  for (auto _ : state) {
    benchmark::DoNotOptimize(auto_scale(q));
  }
}
BENCHMARK(BM_AutoScale);

void BM_StructureMetrics(benchmark::State& state) {
  const Qubo q = chancellor_transform(benchmark_formula(), 5.0).qubo;
  for (auto _ : state) {
    benchmark::DoNotOptimize(structure_metrics(q));
  }
}
BENCHMARK(BM_StructureMetrics);

}  // namespace

BENCHMARK_MAIN();
