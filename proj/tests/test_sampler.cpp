#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "satqubo/cnf.hpp"
#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"
#include "satqubo/sampler.hpp"
#include "satqubo/transforms.hpp"

using namespace satqubo;

namespace {

std::vector<std::uint8_t> bits_of(std::uint64_t x, int d) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) bits[static_cast<std::size_t>(i)] = (x >> i) & 1;
  return bits;
}

bool sample_sets_equal(const SampleSet& a, const SampleSet& b) {
  return a.samples == b.samples && a.solver_info.seed == b.solver_info.seed &&
         a.solver_info.backend == b.solver_info.backend;
}

}  // namespace

TEST_CASE("brute_force on a diagonal QUBO") {
  Qubo q(2);
  q.set_coefficient(0, 0, -1.0);
  q.set_coefficient(1, 1, -1.0);
  const BruteForceResult r = brute_force(q);
  CHECK(r.min_energy == -2.0);
  REQUIRE(r.minimizers.size() == 1);
  CHECK(r.minimizers[0] == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("brute_force on the zero QUBO reports full degeneracy") {
  const BruteForceResult r = brute_force(Qubo(3));
  CHECK(r.min_energy == 0.0);
  CHECK(r.minimizers.size() == 8);
}

TEST_CASE("brute_force matches a direct 16-state table on a pattern gadget") {
  const ClauseGadget g = nuesslein_pattern(0);
  Qubo q(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double v = g.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0.0) q.set_coefficient(i, j, v);
    }
  }
  double best = 1e300;
  std::vector<std::vector<std::uint8_t>> expected;
  for (std::uint64_t x = 0; x < 16; ++x) {
    const auto bits = bits_of(x, 4);
    const double e = q.energy(bits);
    if (e < best) {
      best = e;
      expected.clear();
    }
    if (e == best) expected.push_back(bits);
  }
  std::sort(expected.begin(), expected.end());

  const BruteForceResult r = brute_force(q);
  CHECK(r.min_energy == -1.0);
  CHECK(r.min_energy == best);
  CHECK(r.minimizers == expected);
}

TEST_CASE("brute_force agrees with direct evaluation on random QUBOs") {
  Rng rng(500);
  for (int trial = 0; trial < 10; ++trial) {
    Qubo q(9);
    for (int i = 0; i < 9; ++i) {
      for (int j = i; j < 9; ++j) {
        if (rng.uniform01() < 0.4) {
          q.set_coefficient(i, j, static_cast<double>(
                                      static_cast<int>(rng.uniform_below(11)) - 5));
        }
      }
    }
    double best = 1e300;
    for (std::uint64_t x = 0; x < (1ULL << 9); ++x) {
      best = std::min(best, q.energy(bits_of(x, 9)));
    }
    const BruteForceResult r = brute_force(q);
    CHECK(r.min_energy == best);
    for (const auto& bits : r.minimizers) CHECK(q.energy(bits) == best);
  }
}

TEST_CASE("brute_force refuses oversized problems") {
  CHECK_THROWS_AS(brute_force(Qubo(27)), UnsupportedError);
  CHECK_THROWS_AS(brute_force(Qubo(14), 12), UnsupportedError);
}

TEST_CASE("annealing finds the unique minimum of an easy 4-dim QUBO") {
  Qubo q(4);
  q.set_coefficient(0, 0, -2.0);
  q.set_coefficient(1, 1, 1.0);
  q.set_coefficient(2, 2, -1.0);
  q.set_coefficient(3, 3, 2.0);
  q.set_coefficient(0, 2, -1.0);
  q.set_coefficient(1, 3, 3.0);
  const BruteForceResult exact = brute_force(q);
  const SampleSet set =
      simulated_annealing(q, 100, AnnealSchedule{200, 0.05, 20.0}, 99);
  int hits = 0;
  for (const SampleRecord& s : set.samples) {
    if (s.energy == exact.min_energy) hits += s.count;
  }
  CHECK(hits >= 99);
  CHECK(set.best().energy == exact.min_energy);
}

TEST_CASE("annealing reports the requested number of reads") {
  const CnfFormula f = generate_instance(11, 46, 21, false);
  const Qubo q = chancellor_transform(f, 1.0).qubo;
  const SampleSet set =
      simulated_annealing(q, 1000, default_schedule_for(q), 7);
  CHECK(set.total_reads() == 1000);
  CHECK(set.solver_info.backend == "sa");
  // Energies recompute exactly from their bit vectors.
  for (const SampleRecord& s : set.samples) {
    CHECK(s.energy == q.energy(s.bits));
  }
  // Sorted ascending by energy.
  for (std::size_t i = 1; i < set.samples.size(); ++i) {
    CHECK(set.samples[i - 1].energy <= set.samples[i].energy);
  }
}

TEST_CASE("annealing is deterministic in the seed") {
  const CnfFormula f = generate_instance(8, 20, 22, false);
  const Qubo q = nuesslein_transform(f).qubo;
  const AnnealSchedule schedule = default_schedule_for(q);
  const SampleSet a = simulated_annealing(q, 50, schedule, 1234);
  const SampleSet b = simulated_annealing(q, 50, schedule, 1234);
  CHECK(sample_sets_equal(a, b));
  const SampleSet c = simulated_annealing(q, 50, schedule, 1235);
  CHECK_FALSE(sample_sets_equal(a, c));
}

TEST_CASE("annealing never beats the exact minimum") {
  Rng rng(501);
  for (int trial = 0; trial < 5; ++trial) {
    const CnfFormula f = generate_instance(6, 10, rng.next(), false);
    const Qubo q = chancellor_transform(f, 1.0).qubo;
    const BruteForceResult exact = brute_force(q);
    const SampleSet set =
        simulated_annealing(q, 20, default_schedule_for(q), rng.next());
    CHECK(set.best().energy >= exact.min_energy);
  }
}

TEST_CASE("annealing validates its inputs") {
  Qubo q(2);
  q.set_coefficient(0, 0, 1.0);
  CHECK_THROWS_AS(simulated_annealing(q, 0, AnnealSchedule{}, 0),
                  InvalidParameterError);
  CHECK_THROWS_AS(simulated_annealing(q, 1, AnnealSchedule{0, 0.1, 1.0}, 0),
                  InvalidParameterError);
  CHECK_THROWS_AS(simulated_annealing(q, 1, AnnealSchedule{10, 1.0, 0.5}, 0),
                  InvalidParameterError);
}

TEST_CASE("default schedule follows the coefficient magnitudes") {
  Qubo q(3);
  q.set_coefficient(0, 0, -2.0);
  q.set_coefficient(0, 1, 1.0);
  q.set_coefficient(2, 2, 2.0);
  const AnnealSchedule s = default_schedule_for(q);
  CHECK(s.beta_start == 0.5);
  CHECK(s.beta_end == 10.0);
  CHECK(s.num_sweeps == 1000);

  const AnnealSchedule doubled = default_schedule_for(multiply(q, 2.0));
  CHECK(doubled.beta_start == 0.25);
  CHECK(doubled.beta_end == 5.0);
}

TEST_CASE("default schedule falls back for the zero QUBO") {
  const AnnealSchedule s = default_schedule_for(Qubo(4));
  CHECK(s.beta_start == 0.1);
  CHECK(s.beta_end == 10.0);
}
