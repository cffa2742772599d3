#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satqubo/bench.hpp"
#include "satqubo/cnf.hpp"
#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"
#include "satqubo/sampler.hpp"
#include "satqubo/serialization.hpp"
#include "satqubo/transforms.hpp"

namespace satqubo {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::string output_dir;
};

std::string default_output_dir() {
  if (const char* env = std::getenv("SATQUBO_OUTPUT_DIR")) return env;
  return ".";
}

void print_config(const std::string& command, const json& resolved) {
  std::cout << command << " config: " << resolved.dump() << "\n";
}

std::string instance_filename(int index) {
  char name[32];
  std::snprintf(name, sizeof(name), "instance_%04d.cnf", index);
  return name;
}

fs::path ensure_dir(const std::string& dir) {
  fs::path path(dir);
  fs::create_directories(path);
  return path;
}

// Strips a known suffix, if present.
std::string strip_suffix(const std::string& text, const std::string& suffix) {
  if (text.size() >= suffix.size() &&
      text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return text.substr(0, text.size() - suffix.size());
  }
  return text;
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

const std::vector<std::string> kMethodNames{
    "choi", "chancellorJ1", "chancellorJ5", "nuesslein", "modchancellor"};

int cmd_generate(const GlobalOptions& global, int n, int m, int count,
                 bool satisfiable) {
  print_config("generate",
               json{{"n", n},
                    {"m", m},
                    {"count", count},
                    {"satisfiable", satisfiable},
                    {"seed", global.seed},
                    {"output_dir", global.output_dir}});
  const fs::path dir = ensure_dir(global.output_dir);
  const std::uint64_t root = derive_seed(global.seed, kGenerateStream);
  for (int i = 0; i < count; ++i) {
    const CnfFormula f = generate_instance(
        n, m, derive_seed(root, static_cast<std::uint64_t>(i)), satisfiable);
    const fs::path path = dir / instance_filename(i);
    write_dimacs_file(f, path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_transform(const GlobalOptions& global, const std::string& input,
                  const std::string& method, std::string output_base,
                  std::optional<double> vertex_weight,
                  std::optional<double> edge_weight,
                  std::optional<double> coupling,
                  const std::vector<double>& multipliers) {
  TransformSpec spec = transform_spec_from_label(method);
  if (vertex_weight) spec.vertex_weight = *vertex_weight;
  if (edge_weight) spec.edge_weight = *edge_weight;
  if (coupling) {
    if (spec.kind != TransformKind::kModifiedChancellor) {
      throw InvalidParameterError(
          "--j applies to modchancellor only; chancellorJ1/J5 pin J");
    }
    spec.coupling = *coupling;
  }
  if (!multipliers.empty()) {
    if (spec.kind != TransformKind::kModifiedChancellor) {
      throw InvalidParameterError("--multipliers applies to modchancellor only");
    }
    spec.multipliers = multipliers;
  }
  if (output_base.empty()) {
    output_base = strip_suffix(input, ".cnf") + "." + method;
  }
  print_config("transform", json{{"input", input},
                                 {"method", method},
                                 {"output", output_base},
                                 {"seed", global.seed}});

  const CnfFormula formula = read_dimacs_file(input);
  const TransformOutput out = build_transform(formula, spec, global.seed);
  write_text_file(output_base + ".qubo.json", qubo_to_json(out.qubo));
  write_text_file(output_base + ".map.json", transform_map_to_json(out));
  std::cout << "wrote " << output_base << ".qubo.json (dimension "
            << out.qubo.dimension() << ")\n"
            << "wrote " << output_base << ".map.json\n";
  return kExitOk;
}

int cmd_solve(const GlobalOptions& global, const std::string& qubo_path,
              const std::string& backend, int reads,
              std::optional<int> sweeps, std::optional<double> beta_start,
              std::optional<double> beta_end, std::string map_path,
              const std::string& cnf_path, std::string output_base) {
  if (output_base.empty()) {
    output_base = strip_suffix(qubo_path, ".qubo.json");
  }
  print_config("solve", json{{"qubo", qubo_path},
                             {"backend", backend},
                             {"reads", reads},
                             {"seed", global.seed},
                             {"output", output_base + ".samples.json"}});

  const Qubo qubo = qubo_from_json(read_text_file(qubo_path));

  SampleSet set;
  if (backend == "brute") {
    const BruteForceResult result = brute_force(qubo);
    for (const auto& bits : result.minimizers) {
      set.samples.push_back(SampleRecord{bits, result.min_energy, 1});
    }
    set.solver_info.backend = "brute";
    set.solver_info.seed = global.seed;
    std::cout << "min energy " << result.min_energy << " with "
              << result.minimizers.size() << " minimizer(s)\n";
  } else if (backend == "sa") {
    AnnealSchedule schedule = default_schedule_for(qubo);
    if (sweeps) schedule.num_sweeps = *sweeps;
    if (beta_start) schedule.beta_start = *beta_start;
    if (beta_end) schedule.beta_end = *beta_end;
    set = simulated_annealing(qubo, reads, schedule, global.seed);
    std::cout << "best energy " << set.best().energy << " over "
              << set.total_reads() << " reads\n";
  } else {
    throw InvalidParameterError("unknown backend: " + backend);
  }
  write_text_file(output_base + ".samples.json", sample_set_to_json(set));
  std::cout << "wrote " << output_base << ".samples.json\n";

  if (!cnf_path.empty()) {
    if (map_path.empty()) {
      const std::string candidate =
          strip_suffix(qubo_path, ".qubo.json") + ".map.json";
      if (!fs::exists(candidate)) {
        throw InvalidParameterError(
            "need --map (no sidecar found next to the QUBO)");
      }
      map_path = candidate;
    }
    const CnfFormula formula = read_dimacs_file(cnf_path);
    const TransformOutput out =
        transform_output_from_map(read_text_file(map_path), formula);
    int correct = 0;
    std::optional<Assignment> best_assignment;
    for (const SampleRecord& record : set.samples) {
      const std::optional<Assignment> assignment = decode(out, record.bits);
      if (assignment && evaluate(formula, *assignment).satisfied) {
        correct += record.count;
        if (!best_assignment) best_assignment = assignment;
      }
    }
    std::cout << "verdict: solved=" << (correct > 0 ? "true" : "false")
              << " correct_reads=" << correct << "/" << set.total_reads();
    if (best_assignment) {
      std::cout << " assignment=" << bits_to_string(*best_assignment);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const GlobalOptions& global,
                const std::vector<std::string>& qubo_paths,
                const std::string& method, int count, int n, int m,
                std::string output_base) {
  if (!qubo_paths.empty()) {
    print_config("analyze", json{{"qubos", qubo_paths}});
    for (const std::string& path : qubo_paths) {
      const Qubo qubo = qubo_from_json(read_text_file(path));
      std::cout << path << ": " << metrics_to_json(structure_metrics(qubo));
    }
    return kExitOk;
  }
  if (method.empty()) {
    throw InvalidParameterError("analyze needs --qubo files or --method");
  }
  print_config("analyze", json{{"method", method},
                               {"count", count},
                               {"n", n},
                               {"m", m},
                               {"seed", global.seed},
                               {"output_dir", global.output_dir}});
  ExperimentConfig cfg;
  cfg.num_instances = count;
  cfg.num_variables = n;
  cfg.num_clauses = m;
  cfg.seed = global.seed;
  cfg.transforms = {transform_spec_from_label(method)};
  cfg.reads_per_instance = 1;  // unused by analysis
  const std::vector<CnfFormula> corpus = generate_corpus(cfg);
  const CorpusAnalysis analysis =
      analyze_corpus(corpus, cfg.transforms[0], global.seed);

  const fs::path dir = ensure_dir(global.output_dir);
  if (output_base.empty()) output_base = (dir / ("metrics_" + method)).string();
  write_text_file(output_base + ".csv", corpus_analysis_to_csv(analysis));
  write_text_file(output_base + ".json", corpus_analysis_to_json(analysis));
  std::cout << "distinct quadratic median " << analysis.distinct_quadratic.median
            << ", quadratic range median " << analysis.quadratic_range.median
            << "\n";
  std::cout << "wrote " << output_base << ".csv and " << output_base
            << ".json\n";
  return kExitOk;
}

void write_artifacts(const fs::path& dir, const ExperimentConfig& cfg,
                     const std::vector<CnfFormula>& corpus) {
  const fs::path instances_dir = dir / "instances";
  fs::create_directories(instances_dir);
  for (int i = 0; i < cfg.num_instances; ++i) {
    write_dimacs_file(corpus[static_cast<std::size_t>(i)],
                      (instances_dir / instance_filename(i)).string());
  }
  const std::uint64_t multiplier_root = derive_seed(cfg.seed, kMultiplierStream);
  for (const TransformSpec& spec : cfg.transforms) {
    const fs::path method_dir = dir / "qubos" / spec.label();
    fs::create_directories(method_dir);
    for (int i = 0; i < cfg.num_instances; ++i) {
      const TransformOutput out = build_transform(
          corpus[static_cast<std::size_t>(i)], spec,
          derive_seed(multiplier_root, static_cast<std::uint64_t>(i)));
      const std::string base =
          (method_dir / strip_suffix(instance_filename(i), ".cnf")).string();
      write_text_file(base + ".qubo.json", qubo_to_json(out.qubo));
      write_text_file(base + ".map.json", transform_map_to_json(out));
    }
  }
}

int cmd_bench(const GlobalOptions& global, int experiment,
              const std::string& config_path, int instances, int n, int m,
              int reads, const std::vector<std::string>& methods,
              std::optional<int> sweeps, bool no_scaling, int jobs,
              bool no_artifacts) {
  ExperimentConfig cfg;
  if (!config_path.empty()) {
    cfg = experiment_config_from_json(read_text_file(config_path));
    cfg.jobs = jobs;
  } else {
    cfg.num_instances = instances;
    cfg.num_variables = n;
    cfg.num_clauses = m;
    cfg.seed = global.seed;
    cfg.reads_per_instance = reads;
    cfg.apply_scaling = !no_scaling;
    cfg.jobs = jobs;
    std::vector<std::string> selected = methods;
    if (selected.empty()) {
      if (experiment == 2) {
        selected = {"chancellorJ1"};
      } else if (experiment == 3) {
        selected = {"modchancellor"};
      } else {
        selected = {"choi", "chancellorJ1", "nuesslein", "chancellorJ5"};
      }
    }
    for (const std::string& label : selected) {
      cfg.transforms.push_back(transform_spec_from_label(label));
    }
    if (sweeps) {
      AnnealSchedule schedule;
      schedule.num_sweeps = *sweeps;
      schedule.beta_start = 0.05;
      schedule.beta_end = 20.0;
      cfg.schedule = schedule;
    }
  }
  print_config("bench",
               json::parse(experiment_config_to_json(cfg))
                   .patch(json::array(
                       {{{"op", "add"}, {"path", "/experiment"}, {"value", experiment}},
                        {{"op", "add"},
                         {"path", "/output_dir"},
                         {"value", global.output_dir}}})));

  BenchmarkReport report;
  switch (experiment) {
    case 1: report = run_experiment1(cfg); break;
    case 2: report = run_experiment2(cfg); break;
    case 3: report = run_experiment3(cfg); break;
    default: throw InvalidParameterError("experiment must be 1, 2 or 3");
  }

  const fs::path dir = ensure_dir(global.output_dir);
  write_text_file((dir / "report.json").string(), report_to_json(report));
  write_text_file((dir / "report.csv").string(), report_to_csv(report));
  if (!no_artifacts) {
    write_artifacts(dir, cfg, generate_corpus(cfg));
  }

  std::printf("%-16s %20s %20s\n", "transform", "solved instances",
              "correct solutions");
  for (const TransformReport& arm : report.transforms) {
    std::printf("%-16s %11d (%5.1f%%) %12lld (%5.2f%%)\n", arm.label.c_str(),
                arm.solved_instances, arm.solved_percent,
                arm.correct_solutions, arm.correct_percent);
  }
  std::cout << "wrote " << (dir / "report.json").string() << " and "
            << (dir / "report.csv").string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"3SAT-to-QUBO transformation and benchmarking toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--output-dir parse after the subcommand

  GlobalOptions global;
  global.output_dir = default_output_dir();
  app.add_option("--seed", global.seed, "Root seed for all derived streams");
  app.add_option("--output-dir", global.output_dir,
                 "Directory for generated artifacts (env SATQUBO_OUTPUT_DIR)");

  // generate
  auto* generate = app.add_subcommand("generate", "Write random 3SAT instances");
  int gen_n = 11, gen_m = 46, gen_count = 1;
  bool gen_satisfiable = true;
  generate->add_option("--n", gen_n, "Number of variables");
  generate->add_option("--m", gen_m, "Number of clauses");
  generate->add_option("--count", gen_count, "Number of instances");
  generate->add_flag("--satisfiable,!--no-satisfiable", gen_satisfiable,
                     "Regenerate until the exact solver confirms satisfiability");

  // transform
  auto* transform = app.add_subcommand("transform", "Build a QUBO from a CNF file");
  std::string tr_input, tr_method, tr_output;
  std::optional<double> tr_vertex, tr_edge, tr_coupling;
  std::vector<double> tr_multipliers;
  transform->add_option("--input", tr_input, "DIMACS CNF file")->required();
  transform->add_option("--method", tr_method, "Transformation")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  transform->add_option("--output", tr_output, "Output base path");
  transform->add_option("--vertex-weight", tr_vertex, "Choi vertex weight");
  transform->add_option("--edge-weight", tr_edge, "Choi edge weight");
  transform->add_option("--j", tr_coupling, "Coupling J (modchancellor)");
  transform->add_option("--multipliers", tr_multipliers,
                        "Per-clause multiplier set (modchancellor)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run a solver backend on a QUBO");
  std::string so_qubo, so_backend = "sa", so_map, so_cnf, so_output;
  int so_reads = 1000;
  std::optional<int> so_sweeps;
  std::optional<double> so_beta_start, so_beta_end;
  solve->add_option("--qubo", so_qubo, "QUBO JSON file")->required();
  solve->add_option("--backend", so_backend, "brute or sa")
      ->check(CLI::IsMember({"brute", "sa"}));
  solve->add_option("--reads", so_reads, "Annealing restarts");
  solve->add_option("--sweeps", so_sweeps, "Sweeps per read");
  solve->add_option("--beta-start", so_beta_start, "Initial inverse temperature");
  solve->add_option("--beta-end", so_beta_end, "Final inverse temperature");
  solve->add_option("--map", so_map, "Transform sidecar map");
  solve->add_option("--cnf", so_cnf, "Original CNF for the decoded verdict");
  solve->add_option("--output", so_output, "Output base path");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Structure metrics of QUBOs");
  std::vector<std::string> an_qubos;
  std::string an_method, an_output;
  int an_count = 100, an_n = 11, an_m = 46;
  analyze->add_option("--qubo", an_qubos, "QUBO JSON file(s)");
  analyze->add_option("--method", an_method, "Corpus mode: transformation")
      ->check(CLI::IsMember(kMethodNames));
  analyze->add_option("--count", an_count, "Corpus mode: instances");
  analyze->add_option("--n", an_n, "Corpus mode: variables");
  analyze->add_option("--m", an_m, "Corpus mode: clauses");
  analyze->add_option("--output", an_output, "Output base path");

  // bench
  auto* bench = app.add_subcommand("bench", "Run an end-to-end experiment");
  int be_experiment = 1, be_instances = 100, be_n = 11, be_m = 46,
      be_reads = 1000, be_jobs = 1;
  std::string be_config;
  std::vector<std::string> be_methods;
  std::optional<int> be_sweeps;
  bool be_no_scaling = false, be_no_artifacts = false;
  bench->add_option("--experiment", be_experiment, "1, 2 or 3")
      ->check(CLI::Range(1, 3));
  bench->add_option("--config", be_config, "Experiment config JSON");
  bench->add_option("--instances", be_instances, "Number of instances");
  bench->add_option("--n", be_n, "Variables per instance");
  bench->add_option("--m", be_m, "Clauses per instance");
  bench->add_option("--reads", be_reads, "Reads per instance");
  bench->add_option("--methods", be_methods, "Transformations to run")
      ->check(CLI::IsMember(kMethodNames));
  bench->add_option("--sweeps", be_sweeps, "Fixed sweeps (default: adaptive)");
  bench->add_flag("--no-scaling", be_no_scaling, "Skip hardware-range scaling");
  bench->add_option("--jobs", be_jobs, "Worker threads over instances");
  bench->add_flag("--no-artifacts", be_no_artifacts,
                  "Skip per-instance CNF/QUBO dumps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      return cmd_generate(global, gen_n, gen_m, gen_count, gen_satisfiable);
    }
    if (*transform) {
      return cmd_transform(global, tr_input, tr_method, tr_output, tr_vertex,
                           tr_edge, tr_coupling, tr_multipliers);
    }
    if (*solve) {
      return cmd_solve(global, so_qubo, so_backend, so_reads, so_sweeps,
                       so_beta_start, so_beta_end, so_map, so_cnf, so_output);
    }
    if (*analyze) {
      return cmd_analyze(global, an_qubos, an_method, an_count, an_n, an_m,
                         an_output);
    }
    if (*bench) {
      return cmd_bench(global, be_experiment, be_config, be_instances, be_n,
                       be_m, be_reads, be_methods, be_sweeps, be_no_scaling,
                       be_jobs, be_no_artifacts);
    }
    return kExitUsage;
  } catch (const InvalidParameterError& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitInvalidParameter;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace satqubo
