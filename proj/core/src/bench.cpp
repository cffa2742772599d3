#include "satqubo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"

namespace satqubo {

namespace {

void check_config(const ExperimentConfig& cfg) {
  if (cfg.num_instances < 1) {
    throw InvalidParameterError("need at least one instance");
  }
  if (cfg.reads_per_instance < 1) {
    throw InvalidParameterError("need at least one read per instance");
  }
  if (cfg.transforms.empty()) {
    throw InvalidParameterError("transform list must be nonempty");
  }
  if (cfg.jobs < 1) throw InvalidParameterError("jobs must be positive");
}

// Runs fn(0..count-1) on up to jobs worker threads. Work items write to
// disjoint slots, so aggregation stays order-independent; the first worker
// exception is rethrown after join.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int num_threads = std::min(jobs, count);
  threads.reserve(static_cast<std::size_t>(num_threads));
  for (int t = 0; t < num_threads; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

enum class Pipeline { kPlain, kMultiplyBy1500, kModifiedWithReference };

BenchmarkReport run_pipeline(const ExperimentConfig& cfg, Pipeline pipeline) {
  check_config(cfg);
  const std::vector<CnfFormula> corpus = generate_corpus(cfg);
  const std::uint64_t sample_root = derive_seed(cfg.seed, kSampleStream);
  const std::uint64_t multiplier_root = derive_seed(cfg.seed, kMultiplierStream);

  BenchmarkReport report;
  report.config = cfg;
  report.transforms.reserve(cfg.transforms.size());

  for (std::size_t arm_index = 0; arm_index < cfg.transforms.size();
       ++arm_index) {
    const TransformSpec& spec = cfg.transforms[arm_index];
    TransformReport arm;
    arm.label = spec.label();
    arm.instances.resize(static_cast<std::size_t>(cfg.num_instances));

    parallel_for(cfg.num_instances, cfg.jobs, [&](int i) {
      const CnfFormula& formula = corpus[static_cast<std::size_t>(i)];
      const std::uint64_t instance_seed =
          derive_seed(multiplier_root, static_cast<std::uint64_t>(i));
      const TransformOutput output = build_transform(formula, spec, instance_seed);

      InstanceResult row;
      row.instance_id = i;
      row.metrics = structure_metrics(output.qubo);
      if (pipeline == Pipeline::kModifiedWithReference) {
        row.reference_metrics = structure_metrics(
            chancellor_transform(formula, spec.coupling).qubo);
      }

      Qubo sampled = output.qubo;
      if (pipeline == Pipeline::kMultiplyBy1500) {
        sampled = multiply(sampled, 1500.0);
      }
      if (cfg.apply_scaling) sampled = auto_scale(sampled);

      const AnnealSchedule schedule =
          cfg.schedule ? *cfg.schedule : default_schedule_for(sampled);
      const std::uint64_t read_seed = derive_seed(
          derive_seed(sample_root, static_cast<std::uint64_t>(i)),
          static_cast<std::uint64_t>(arm_index));
      const SampleSet samples = simulated_annealing(
          sampled, cfg.reads_per_instance, schedule, read_seed);

      row.min_energy = samples.best().energy;
      for (const SampleRecord& record : samples.samples) {
        const std::optional<Assignment> assignment =
            decode(output, record.bits);
        if (assignment && evaluate(formula, *assignment).satisfied) {
          row.num_correct_reads += record.count;
        }
      }
      arm.instances[static_cast<std::size_t>(i)] = row;
    });

    for (const InstanceResult& row : arm.instances) {
      if (row.num_correct_reads > 0) ++arm.solved_instances;
      arm.correct_solutions += row.num_correct_reads;
    }
    arm.solved_percent =
        100.0 * arm.solved_instances / static_cast<double>(cfg.num_instances);
    arm.correct_percent =
        100.0 * static_cast<double>(arm.correct_solutions) /
        (static_cast<double>(cfg.num_instances) *
         static_cast<double>(cfg.reads_per_instance));
    report.transforms.push_back(std::move(arm));
  }
  return report;
}

}  // namespace

std::string TransformSpec::label() const {
  switch (kind) {
    case TransformKind::kChoi:
      return "choi";
    case TransformKind::kChancellor: {
      if (coupling == kChancellorJ1) return "chancellorJ1";
      if (coupling == kChancellorJ5) return "chancellorJ5";
      return "chancellorJ" + std::to_string(coupling);
    }
    case TransformKind::kNuesslein:
      return "nuesslein";
    case TransformKind::kModifiedChancellor:
      return "modchancellor";
  }
  throw InvalidParameterError("unknown transform kind");
}

TransformSpec transform_spec_from_label(const std::string& label) {
  TransformSpec spec;
  if (label == "choi") {
    spec.kind = TransformKind::kChoi;
  } else if (label == "chancellorJ1") {
    spec.kind = TransformKind::kChancellor;
    spec.coupling = kChancellorJ1;
  } else if (label == "chancellorJ5") {
    spec.kind = TransformKind::kChancellor;
    spec.coupling = kChancellorJ5;
  } else if (label == "nuesslein") {
    spec.kind = TransformKind::kNuesslein;
  } else if (label == "modchancellor") {
    spec.kind = TransformKind::kModifiedChancellor;
    spec.coupling = kChancellorJ1;
    spec.multipliers = kDefaultMultipliers;
  } else {
    throw InvalidParameterError("unknown transform label: " + label);
  }
  return spec;
}

TransformOutput build_transform(const CnfFormula& formula,
                                const TransformSpec& spec,
                                std::uint64_t instance_seed) {
  switch (spec.kind) {
    case TransformKind::kChoi:
      return choi_transform(formula, spec.vertex_weight, spec.edge_weight);
    case TransformKind::kChancellor:
      return chancellor_transform(formula, spec.coupling);
    case TransformKind::kNuesslein:
      return nuesslein_transform(formula);
    case TransformKind::kModifiedChancellor:
      return modified_chancellor_transform(
          formula, spec.coupling,
          spec.multipliers.empty() ? kDefaultMultipliers : spec.multipliers,
          instance_seed);
  }
  throw InvalidParameterError("unknown transform kind");
}

std::vector<CnfFormula> generate_corpus(const ExperimentConfig& config) {
  const std::uint64_t root = derive_seed(config.seed, kGenerateStream);
  std::vector<CnfFormula> corpus;
  corpus.reserve(static_cast<std::size_t>(config.num_instances));
  for (int i = 0; i < config.num_instances; ++i) {
    corpus.push_back(generate_instance(
        config.num_variables, config.num_clauses,
        derive_seed(root, static_cast<std::uint64_t>(i)), true));
  }
  return corpus;
}

BenchmarkReport run_experiment1(const ExperimentConfig& config) {
  return run_pipeline(config, Pipeline::kPlain);
}

BenchmarkReport run_experiment2(const ExperimentConfig& config) {
  for (const TransformSpec& spec : config.transforms) {
    if (spec.kind != TransformKind::kChancellor) {
      throw InvalidParameterError(
          "experiment 2 runs ChancellorJ1 arms only");
    }
  }
  return run_pipeline(config, Pipeline::kMultiplyBy1500);
}

BenchmarkReport run_experiment3(const ExperimentConfig& config) {
  for (const TransformSpec& spec : config.transforms) {
    if (spec.kind != TransformKind::kModifiedChancellor) {
      throw InvalidParameterError(
          "experiment 3 runs modified-Chancellor arms only");
    }
  }
  return run_pipeline(config, Pipeline::kModifiedWithReference);
}

Quartiles summarize(std::vector<double> values) {
  Quartiles q;
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  const auto at = [&](double p) {
    const double position = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(position);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = position - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  q.min = values.front();
  q.q1 = at(0.25);
  q.median = at(0.5);
  q.q3 = at(0.75);
  q.max = values.back();
  double total = 0.0;
  for (const double v : values) total += v;
  q.mean = total / static_cast<double>(values.size());
  return q;
}

CorpusAnalysis analyze_corpus(const std::vector<CnfFormula>& formulas,
                              const TransformSpec& spec, std::uint64_t seed) {
  CorpusAnalysis analysis;
  analysis.label = spec.label();
  analysis.rows.reserve(formulas.size());
  const std::uint64_t root = derive_seed(seed, kMultiplierStream);
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const TransformOutput output =
        build_transform(formulas[i], spec, derive_seed(root, i));
    analysis.rows.push_back(structure_metrics(output.qubo));
  }
  std::vector<double> dq, dl, rq, rl;
  for (const StructureMetrics& m : analysis.rows) {
    dq.push_back(m.num_distinct_quadratic);
    dl.push_back(m.num_distinct_linear);
    rq.push_back(m.quadratic_range_size);
    rl.push_back(m.linear_range_size);
  }
  analysis.distinct_quadratic = summarize(std::move(dq));
  analysis.distinct_linear = summarize(std::move(dl));
  analysis.quadratic_range = summarize(std::move(rq));
  analysis.linear_range = summarize(std::move(rl));
  return analysis;
}

}  // namespace satqubo
