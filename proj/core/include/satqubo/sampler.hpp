#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satqubo/qubo.hpp"

namespace satqubo {

// Geometric inverse-temperature ladder for simulated annealing.
struct AnnealSchedule {
  int num_sweeps = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;

  bool operator==(const AnnealSchedule&) const = default;
};

struct SampleRecord {
  std::vector<std::uint8_t> bits;
  double energy = 0.0;
  int count = 1;

  bool operator==(const SampleRecord&) const = default;
};

struct SolverInfo {
  std::string backend;
  std::uint64_t seed = 0;
  AnnealSchedule schedule{};
  double wall_time_seconds = 0.0;  // informational, never serialized
};

// Aggregated solver reads, sorted ascending by (energy, bits). Identical bit
// vectors are merged with multiplicity counts.
struct SampleSet {
  std::vector<SampleRecord> samples;
  SolverInfo solver_info;

  const SampleRecord& best() const { return samples.front(); }
  int total_reads() const;
};

inline constexpr int kBruteForceMaxDimension = 26;

struct BruteForceResult {
  double min_energy = 0.0;
  std::vector<std::vector<std::uint8_t>> minimizers;  // lexicographic order
};

// Exhaustive ground-state enumeration via Gray-code sweeps. Returns every bit
// vector whose energy is within tie_tolerance of the global minimum.
BruteForceResult brute_force(const Qubo& qubo,
                             int max_dimension = kBruteForceMaxDimension,
                             double tie_tolerance = 0.0);

// num_reads independent restarts of single-bit-flip Metropolis annealing with
// sequential sweep order. Read r draws from the seed stream derive_seed(seed,
// r), so restarts are order-independent and the run replays exactly.
SampleSet simulated_annealing(const Qubo& qubo, int num_reads,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed);

// beta_start = 1 / max|coefficient|, beta_end = 10 / min nonzero
// |coefficient|, 1000 sweeps. Fixed fallback for an all-zero QUBO.
AnnealSchedule default_schedule_for(const Qubo& qubo);

}  // namespace satqubo
