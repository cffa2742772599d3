#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satqubo/cnf.hpp"
#include "satqubo/qubo.hpp"
#include "satqubo/sampler.hpp"
#include "satqubo/transforms.hpp"

namespace satqubo {

// One arm of an experiment: which transform to run and with which parameters.
struct TransformSpec {
  TransformKind kind = TransformKind::kChancellor;
  double coupling = kChancellorJ1;              // Chancellor / modified
  double vertex_weight = kDefaultVertexWeight;  // Choi
  double edge_weight = kDefaultEdgeWeight;      // Choi
  std::vector<double> multipliers;              // modified; empty -> default

  // Short name used in reports and file paths ("choi", "chancellorJ1", ...).
  std::string label() const;

  bool operator==(const TransformSpec&) const = default;
};

TransformSpec transform_spec_from_label(const std::string& label);

// Builds the arm's transform for one formula. instance_seed feeds the
// modified-Chancellor multiplier stream and is ignored by the other kinds.
TransformOutput build_transform(const CnfFormula& formula,
                                const TransformSpec& spec,
                                std::uint64_t instance_seed);

struct ExperimentConfig {
  int num_instances = 100;
  int num_variables = 11;
  int num_clauses = 46;
  std::uint64_t seed = 0;
  int reads_per_instance = 200;
  std::vector<TransformSpec> transforms;
  std::optional<AnnealSchedule> schedule;  // nullopt: derived per QUBO
  bool apply_scaling = true;
  int jobs = 1;

  bool operator==(const ExperimentConfig&) const = default;
};

struct InstanceResult {
  int instance_id = 0;
  double min_energy = 0.0;
  int num_correct_reads = 0;
  StructureMetrics metrics;
  // Experiment 3 only: metrics of the unmodified transform for comparison.
  std::optional<StructureMetrics> reference_metrics;

  bool operator==(const InstanceResult&) const = default;
};

struct TransformReport {
  std::string label;
  int solved_instances = 0;        // instances with >= 1 correct read
  long long correct_solutions = 0; // total correct reads
  double solved_percent = 0.0;
  double correct_percent = 0.0;
  std::vector<InstanceResult> instances;

  bool operator==(const TransformReport&) const = default;
};

struct BenchmarkReport {
  ExperimentConfig config;
  std::vector<TransformReport> transforms;

  bool operator==(const BenchmarkReport&) const = default;
};

// Instance i is generated from the stream derive_seed(derive_seed(seed,
// kGenerateStream), i); the sampler for (instance i, arm t) draws from
// derive_seed(derive_seed(derive_seed(seed, kSampleStream), i), t); the
// modified-Chancellor multipliers for instance i from
// derive_seed(derive_seed(seed, kMultiplierStream), i).
inline constexpr std::uint64_t kGenerateStream = 1;
inline constexpr std::uint64_t kSampleStream = 2;
inline constexpr std::uint64_t kMultiplierStream = 3;

// Satisfiable instances for every experiment, shared across arms.
std::vector<CnfFormula> generate_corpus(const ExperimentConfig& config);

// Transform, optionally scale, sample, decode, score: a read is correct iff
// its decoded assignment satisfies the formula.
BenchmarkReport run_experiment1(const ExperimentConfig& config);

// Same pipeline with every QUBO multiplied by 1500 before scaling. Because
// the scale factor absorbs the multiplier exactly, reports equal experiment
// 1's for the same config (ChancellorJ1 arms).
BenchmarkReport run_experiment2(const ExperimentConfig& config);

// Modified-Chancellor pipeline; rows carry pre/post structure metrics.
BenchmarkReport run_experiment3(const ExperimentConfig& config);

// Five-number summary plus mean.
struct Quartiles {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

Quartiles summarize(std::vector<double> values);

struct CorpusAnalysis {
  std::string label;
  std::vector<StructureMetrics> rows;
  Quartiles distinct_quadratic;
  Quartiles distinct_linear;
  Quartiles quadratic_range;
  Quartiles linear_range;
};

// Per-instance structure metrics plus corpus summaries for one transform.
CorpusAnalysis analyze_corpus(const std::vector<CnfFormula>& formulas,
                              const TransformSpec& spec,
                              std::uint64_t seed = 0);

}  // namespace satqubo
