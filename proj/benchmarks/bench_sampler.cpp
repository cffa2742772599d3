#include <benchmark/benchmark.h>

#include "satqubo/cnf.hpp"
#include "satqubo/sampler.hpp"
#include "satqubo/transforms.hpp"

namespace {

using namespace satqubo;

const Qubo& benchmark_qubo() {
  static const Qubo q =
      chancellor_transform(generate_instance(11, 46, 7, false), 1.0).qubo;
  return q;
}

void BM_SimulatedAnnealingRead(benchmark::State& state) {
  const Qubo& q = benchmark_qubo();
  const AnnealSchedule schedule{static_cast<int>(state.range(0)), 0.05, 15.0};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulated_annealing(q, 1, schedule, seed++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          q.dimension());
}
BENCHMARK(BM_SimulatedAnnealingRead)->Arg(100)->Arg(1000);

void BM_BruteForce(benchmark::State& state) {
  const Qubo q = chancellor_transform(
                     generate_instance(6, static_cast<int>(state.range(0)), 7,
                                       false),
                     1.0)
                     .qubo;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(q));
  }
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14);

void BM_Energy(benchmark::State& state) {
  const Qubo& q = benchmark_qubo();
  const std::vector<std::uint8_t> bits(static_cast<std::size_t>(q.dimension()), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.energy(bits));
  }
}
BENCHMARK(BM_Energy);

}  // namespace

BENCHMARK_MAIN();
