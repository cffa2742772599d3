#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "satqubo/errors.hpp"
#include "satqubo/qubo.hpp"
#include "satqubo/rng.hpp"
#include "satqubo/transforms.hpp"

using namespace satqubo;

namespace {

std::vector<std::uint8_t> bits_of(std::uint64_t x, int d) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) bits[static_cast<std::size_t>(i)] = (x >> i) & 1;
  return bits;
}

std::vector<std::int8_t> spins_of(const std::vector<std::uint8_t>& bits) {
  std::vector<std::int8_t> spins(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    spins[i] = bits[i] ? 1 : -1;
  }
  return spins;
}

Qubo random_qubo(int d, Rng& rng, double density = 0.5) {
  Qubo q(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (rng.uniform01() < density) {
        q.set_coefficient(i, j, static_cast<double>(
                                    static_cast<int>(rng.uniform_below(17)) - 8));
      }
    }
  }
  return q;
}

}  // namespace

TEST_CASE("energy of a single diagonal term") {
  Qubo q(1);
  q.set_coefficient(0, 0, -1.0);
  CHECK(q.energy(std::vector<std::uint8_t>{1}) == -1.0);
  CHECK(q.energy(std::vector<std::uint8_t>{0}) == 0.0);
}

TEST_CASE("energy of the all-zero vector is zero") {
  Rng rng(11);
  const Qubo q = random_qubo(6, rng);
  CHECK(q.energy(bits_of(0, 6)) == 0.0);
}

TEST_CASE("energy of the first pattern matrix at (0,0,0,1)") {
  const ClauseGadget g = nuesslein_pattern(0);
  Qubo q(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double v = g.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0.0) q.set_coefficient(i, j, v);
    }
  }
  CHECK(q.energy(std::vector<std::uint8_t>{0, 0, 0, 1}) == 1.0);
}

TEST_CASE("energy rejects mismatched lengths") {
  Qubo q(3);
  CHECK_THROWS_AS(q.energy(std::vector<std::uint8_t>{0, 1}), InvalidParameterError);
}

TEST_CASE("coefficient accessors normalize index order and drop zeros") {
  Qubo q(3);
  q.set_coefficient(2, 0, 5.0);
  CHECK(q.coefficient(0, 2) == 5.0);
  CHECK(q.terms().count({0, 2}) == 1);
  q.add_coefficient(0, 2, -5.0);
  CHECK(q.terms().empty());
  CHECK_THROWS_AS(q.set_coefficient(0, 3, 1.0), InvalidParameterError);
}

TEST_CASE("to_ising of a single linear term") {
  Qubo q(1);
  q.set_coefficient(0, 0, 1.0);
  const IsingModel m = to_ising(q);
  CHECK(m.fields.at(0) == 0.5);
  CHECK(m.offset == 0.5);
  CHECK(m.couplings.empty());
}

TEST_CASE("zero QUBO maps to the zero Ising model") {
  const IsingModel m = to_ising(Qubo(4));
  CHECK(m.fields.empty());
  CHECK(m.couplings.empty());
  CHECK(m.offset == 0.0);
}

TEST_CASE("QUBO and Ising energies agree on every state") {
  Rng rng(31);
  const int d = 10;
  const Qubo q = random_qubo(d, rng);
  const IsingModel m = to_ising(q);
  for (std::uint64_t x = 0; x < (1ULL << d); ++x) {
    const auto bits = bits_of(x, d);
    CHECK(q.energy(bits) ==
          doctest::Approx(ising_energy(m, spins_of(bits))).epsilon(1e-12));
  }
}

TEST_CASE("Ising round trip recovers the coefficients") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Qubo q = random_qubo(8, rng);
    const auto [back, offset] = from_ising(to_ising(q));
    CHECK(back.dimension() == q.dimension());
    for (const auto& [key, v] : q.terms()) {
      CHECK(back.coefficient(key.first, key.second) ==
            doctest::Approx(v).epsilon(1e-12));
    }
    for (const auto& [key, v] : back.terms()) {
      CHECK(q.coefficient(key.first, key.second) ==
            doctest::Approx(v).epsilon(1e-12));
    }
    CHECK(offset == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("from_ising offset satisfies the energy identity") {
  IsingModel m;
  m.dimension = 2;
  m.fields[0] = 1.5;
  m.fields[1] = -2.0;
  m.couplings[{0, 1}] = 0.75;
  m.offset = 3.0;
  const auto [q, offset] = from_ising(m);
  for (std::uint64_t x = 0; x < 4; ++x) {
    const auto bits = bits_of(x, 2);
    CHECK(q.energy(bits) + offset ==
          doctest::Approx(ising_energy(m, spins_of(bits))).epsilon(1e-12));
  }
}

TEST_CASE("scale_factor evaluates the clipped ratio maximum") {
  IsingModel m;
  m.dimension = 3;
  m.fields[0] = -8.0;
  m.fields[1] = 8.0;
  m.couplings[{0, 1}] = 3.0;
  CHECK(scale_factor(m) == 3.0);
}

TEST_CASE("scale_factor is 1 for in-range and all-zero models") {
  IsingModel m;
  m.dimension = 2;
  m.fields[0] = 1.0;
  m.couplings[{0, 1}] = -0.5;
  CHECK(scale_factor(m) == 1.0);
  CHECK(scale_factor(IsingModel{2, {}, {}, 0.0}) == 1.0);
}

TEST_CASE("scale_factor rejects degenerate ranges") {
  IsingModel m;
  m.dimension = 1;
  m.fields[0] = 1.0;
  CHECK_THROWS_AS(scale_factor(m, Range{0.0, 4.0}, kDefaultCouplingRange),
                  InvalidParameterError);
  CHECK_THROWS_AS(scale_factor(m, kDefaultFieldRange, Range{-1.0, -0.5}),
                  InvalidParameterError);
}

TEST_CASE("apply_dwave_scaling collapses uniform factors") {
  // At benchmark size the raw scale factor exceeds 1, so scaling is active
  // and the multiplier cancels exactly.
  const CnfFormula f = generate_instance(11, 46, 5, false);
  const Qubo q = chancellor_transform(f, 1.0).qubo;
  REQUIRE(scale_factor(to_ising(q)) > 1.0);
  const Qubo a = apply_dwave_scaling(q);
  const Qubo b = apply_dwave_scaling(multiply(q, 1500.0));
  REQUIRE(a.terms().size() == b.terms().size());
  for (const auto& [key, v] : a.terms()) {
    CHECK(b.coefficient(key.first, key.second) == doctest::Approx(v).epsilon(1e-9));
  }
}

TEST_CASE("apply_dwave_scaling leaves in-range QUBOs unchanged") {
  Qubo q(2);
  q.set_coefficient(0, 0, 1.0);
  q.set_coefficient(0, 1, -0.5);
  CHECK(apply_dwave_scaling(q) == q);
}

TEST_CASE("auto_scale cancels uniform multipliers bit for bit") {
  // Small instances sit inside the hardware ranges (raw factor < 1), which
  // is exactly where the floored variant cannot cancel the multiplier.
  for (const std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    const CnfFormula f = generate_instance(6, 12, seed, false);
    const Qubo q = chancellor_transform(f, 1.0).qubo;
    CHECK(auto_scale(multiply(q, 1500.0)) == auto_scale(q));
    CHECK(auto_scale(multiply(q, 7.0)) == auto_scale(q));
  }
  CHECK(auto_scale(Qubo(3)) == Qubo(3));
}

TEST_CASE("auto_scale magnifies in-range problems to the full range") {
  Qubo q(2);
  q.set_coefficient(0, 0, 1.0);   // field 0.5 after conversion
  q.set_coefficient(0, 1, -0.5);  // coupling -0.125
  const Qubo scaled = auto_scale(q);
  const IsingModel m = to_ising(scaled);
  double largest_ratio = 0.0;
  for (const auto& [i, h] : m.fields) {
    largest_ratio = std::max(largest_ratio, std::abs(h) / 4.0);
  }
  for (const auto& [key, j] : m.couplings) {
    largest_ratio = std::max(largest_ratio, std::abs(j));
  }
  CHECK(largest_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("apply_dwave_scaling is idempotent within tolerance") {
  const CnfFormula f = generate_instance(7, 20, 9, false);
  const Qubo q = chancellor_transform(f, 5.0).qubo;
  const Qubo once = apply_dwave_scaling(q);
  const Qubo twice = apply_dwave_scaling(once);
  for (const auto& [key, v] : once.terms()) {
    CHECK(std::abs(twice.coefficient(key.first, key.second) - v) <= 1e-9);
  }
}

TEST_CASE("scaling preserves the argmin set exhaustively") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Qubo q = random_qubo(10, rng);
    if (q.terms().empty()) continue;
    const Qubo scaled = apply_dwave_scaling(q);
    const int d = q.dimension();
    double best_q = 0.0, best_s = 0.0;
    for (std::uint64_t x = 0; x < (1ULL << d); ++x) {
      const auto bits = bits_of(x, d);
      best_q = std::min(best_q, q.energy(bits));
      best_s = std::min(best_s, scaled.energy(bits));
    }
    for (std::uint64_t x = 0; x < (1ULL << d); ++x) {
      const auto bits = bits_of(x, d);
      const bool is_min_q = q.energy(bits) <= best_q + 1e-9;
      const bool is_min_s = scaled.energy(bits) <= best_s + 1e-9;
      CHECK(is_min_q == is_min_s);
    }
  }
}

TEST_CASE("multiply scales energies linearly and keeps k=1 identity") {
  Rng rng(78);
  const Qubo q = random_qubo(8, rng);
  CHECK(multiply(q, 1.0) == q);
  const Qubo scaled = multiply(q, 3.5);
  for (std::uint64_t x = 0; x < (1ULL << 8); ++x) {
    const auto bits = bits_of(x, 8);
    CHECK(scaled.energy(bits) == doctest::Approx(3.5 * q.energy(bits)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(multiply(q, 0.0), InvalidParameterError);
  CHECK_THROWS_AS(multiply(q, -2.0), InvalidParameterError);
}

TEST_CASE("structure metrics of the first pattern matrix") {
  const ClauseGadget g = nuesslein_pattern(0);
  Qubo q(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double v = g.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0.0) q.set_coefficient(i, j, v);
    }
  }
  const StructureMetrics m = structure_metrics(q);
  CHECK(m.num_distinct_quadratic == 3);  // {2, -2, 1}
  CHECK(m.quadratic_range_size == 4.0);
}

TEST_CASE("structure metrics of diagonal-only and empty QUBOs") {
  Qubo diag(3);
  diag.set_coefficient(0, 0, -1.0);
  diag.set_coefficient(1, 1, 2.0);
  const StructureMetrics m = structure_metrics(diag);
  CHECK(m.num_distinct_quadratic == 0);
  CHECK(m.quadratic_range_size == 0.0);
  CHECK(m.num_distinct_linear == 2);
  CHECK(m.linear_range_size == 3.0);
  CHECK(m.density == 0.0);

  const StructureMetrics zero = structure_metrics(Qubo(5));
  CHECK(zero.dimension == 5);
  CHECK(zero.num_distinct_quadratic == 0);
  CHECK(zero.num_distinct_linear == 0);
  CHECK(zero.quadratic_range_size == 0.0);
  CHECK(zero.linear_range_size == 0.0);
  CHECK(zero.scale_factor == 0.0);
  CHECK(zero.density == 0.0);
}

TEST_CASE("ChancellorJ1 has strictly fewer distinct quadratic values than J5") {
  const CnfFormula f = generate_instance(11, 46, 17, true);
  const StructureMetrics j1 = structure_metrics(chancellor_transform(f, 1.0).qubo);
  const StructureMetrics j5 = structure_metrics(chancellor_transform(f, 5.0).qubo);
  CHECK(j1.num_distinct_quadratic < 10);
  CHECK(j1.num_distinct_quadratic < j5.num_distinct_quadratic);
}

TEST_CASE("structure metrics are invariant under index permutation") {
  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 8;
    const Qubo q = random_qubo(d, rng);
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = d - 1; i > 0; --i) {
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[rng.uniform_below(static_cast<std::uint64_t>(i + 1))]);
    }
    Qubo permuted(d);
    for (const auto& [key, v] : q.terms()) {
      permuted.add_coefficient(perm[static_cast<std::size_t>(key.first)],
                               perm[static_cast<std::size_t>(key.second)], v);
    }
    CHECK(structure_metrics(permuted) == structure_metrics(q));
  }
}
