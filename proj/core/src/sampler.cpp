#include "satqubo/sampler.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"

namespace satqubo {

namespace {

// Flat adjacency view of a QUBO for O(1) flip proposals: field[i] tracks the
// energy delta of setting bit i given the current neighbors.
struct Adjacency {
  int dimension = 0;
  std::vector<double> diagonal;
  std::vector<std::vector<std::pair<int, double>>> neighbors;

  explicit Adjacency(const Qubo& qubo)
      : dimension(qubo.dimension()),
        diagonal(static_cast<std::size_t>(qubo.dimension()), 0.0),
        neighbors(static_cast<std::size_t>(qubo.dimension())) {
    for (const auto& [key, v] : qubo.terms()) {
      const auto [i, j] = key;
      if (i == j) {
        diagonal[static_cast<std::size_t>(i)] = v;
      } else {
        neighbors[static_cast<std::size_t>(i)].emplace_back(j, v);
        neighbors[static_cast<std::size_t>(j)].emplace_back(i, v);
      }
    }
  }
};

// Energy change of flipping bit i given current fields.
inline double flip_delta(const std::vector<std::uint8_t>& bits,
                         const std::vector<double>& field, int i) {
  return bits[static_cast<std::size_t>(i)] ? -field[static_cast<std::size_t>(i)]
                                           : field[static_cast<std::size_t>(i)];
}

// Applies the flip and keeps neighbor fields consistent.
inline void apply_flip(const Adjacency& adj, std::vector<std::uint8_t>& bits,
                       std::vector<double>& field, int i) {
  bits[static_cast<std::size_t>(i)] ^= 1;
  const double sign = bits[static_cast<std::size_t>(i)] ? 1.0 : -1.0;
  for (const auto& [j, w] : adj.neighbors[static_cast<std::size_t>(i)]) {
    field[static_cast<std::size_t>(j)] += sign * w;
  }
}

std::vector<double> initial_fields(const Adjacency& adj,
                                   const std::vector<std::uint8_t>& bits) {
  std::vector<double> field = adj.diagonal;
  for (int i = 0; i < adj.dimension; ++i) {
    for (const auto& [j, w] : adj.neighbors[static_cast<std::size_t>(i)]) {
      if (bits[static_cast<std::size_t>(j)]) {
        field[static_cast<std::size_t>(i)] += w;
      }
    }
  }
  return field;
}

void check_schedule(const AnnealSchedule& schedule) {
  if (schedule.num_sweeps < 1) {
    throw InvalidParameterError("schedule needs at least one sweep");
  }
  if (!(schedule.beta_start > 0.0) || !(schedule.beta_end > 0.0) ||
      !(schedule.beta_start < schedule.beta_end)) {
    throw InvalidParameterError("need 0 < beta_start < beta_end");
  }
}

}  // namespace

int SampleSet::total_reads() const {
  int total = 0;
  for (const SampleRecord& s : samples) total += s.count;
  return total;
}

BruteForceResult brute_force(const Qubo& qubo, int max_dimension,
                             double tie_tolerance) {
  const int d = qubo.dimension();
  if (d > max_dimension) {
    throw UnsupportedError("brute force capped at dimension " +
                           std::to_string(max_dimension));
  }
  const Adjacency adj(qubo);
  const std::uint64_t num_states = 1ULL << d;

  // Gray-code sweep: consecutive states differ in one bit, so each step costs
  // one flip delta. Two passes keep the arithmetic identical between finding
  // the minimum and collecting the ties.
  auto sweep = [&](auto&& visit) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d), 0);
    std::vector<double> field = adj.diagonal;
    double energy = 0.0;
    visit(bits, energy);
    for (std::uint64_t step = 1; step < num_states; ++step) {
      const int i = std::countr_zero(step);
      energy += flip_delta(bits, field, i);
      apply_flip(adj, bits, field, i);
      visit(bits, energy);
    }
  };

  BruteForceResult result;
  result.min_energy = std::numeric_limits<double>::infinity();
  sweep([&](const std::vector<std::uint8_t>&, double energy) {
    result.min_energy = std::min(result.min_energy, energy);
  });
  sweep([&](const std::vector<std::uint8_t>& bits, double energy) {
    if (energy <= result.min_energy + tie_tolerance) {
      result.minimizers.push_back(bits);
    }
  });
  std::sort(result.minimizers.begin(), result.minimizers.end());
  return result;
}

SampleSet simulated_annealing(const Qubo& qubo, int num_reads,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed) {
  if (num_reads < 1) {
    throw InvalidParameterError("need at least one read");
  }
  check_schedule(schedule);
  const auto start_time = std::chrono::steady_clock::now();

  const int d = qubo.dimension();
  const Adjacency adj(qubo);

  std::vector<double> betas(static_cast<std::size_t>(schedule.num_sweeps));
  if (schedule.num_sweeps == 1) {
    betas[0] = schedule.beta_start;
  } else {
    const double ratio = schedule.beta_end / schedule.beta_start;
    for (int t = 0; t < schedule.num_sweeps; ++t) {
      betas[static_cast<std::size_t>(t)] =
          schedule.beta_start *
          std::pow(ratio, static_cast<double>(t) / (schedule.num_sweeps - 1));
    }
  }

  std::map<std::vector<std::uint8_t>, int> counts;
  for (int read = 0; read < num_reads; ++read) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(read)));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d));
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    std::vector<double> field = initial_fields(adj, bits);

    for (const double beta : betas) {
      for (int i = 0; i < d; ++i) {
        const double delta = flip_delta(bits, field, i);
        if (delta <= 0.0 || rng.uniform01() < std::exp(-beta * delta)) {
          apply_flip(adj, bits, field, i);
        }
      }
    }
    ++counts[bits];
  }

  SampleSet set;
  set.samples.reserve(counts.size());
  for (const auto& [bits, count] : counts) {
    set.samples.push_back(SampleRecord{bits, qubo.energy(bits), count});
  }
  std::sort(set.samples.begin(), set.samples.end(),
            [](const SampleRecord& a, const SampleRecord& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return a.bits < b.bits;
            });
  set.solver_info.backend = "sa";
  set.solver_info.seed = seed;
  set.solver_info.schedule = schedule;
  set.solver_info.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  return set;
}

AnnealSchedule default_schedule_for(const Qubo& qubo) {
  if (qubo.terms().empty()) return AnnealSchedule{1000, 0.1, 10.0};
  double largest = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& [key, v] : qubo.terms()) {
    const double mag = std::abs(v);
    largest = std::max(largest, mag);
    smallest = std::min(smallest, mag);
  }
  return AnnealSchedule{1000, 1.0 / largest, 10.0 / smallest};
}

}  // namespace satqubo
