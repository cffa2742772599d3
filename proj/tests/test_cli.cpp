#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "cli.hpp"
#include "satqubo/cnf.hpp"
#include "satqubo/serialization.hpp"

using namespace satqubo;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("satqubo_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str(const std::string& name) const { return (path / name).string(); }
};

int cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"satqubo"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("generate writes deterministic satisfiable instances") {
  TempDir a, b;
  CHECK(cli({"generate", "--n", "11", "--m", "46", "--count", "2", "--seed",
             "3", "--output-dir", a.path.string()}) == kExitOk);
  CHECK(cli({"generate", "--n", "11", "--m", "46", "--count", "2", "--seed",
             "3", "--output-dir", b.path.string()}) == kExitOk);
  const CnfFormula f0 = read_dimacs_file(a.str("instance_0000.cnf"));
  CHECK(f0.num_variables == 11);
  CHECK(f0.num_clauses() == 46);
  CHECK(solve_exact(f0).has_value());
  CHECK(read_text_file(a.str("instance_0000.cnf")) ==
        read_text_file(b.str("instance_0000.cnf")));
  CHECK(read_text_file(a.str("instance_0001.cnf")) ==
        read_text_file(b.str("instance_0001.cnf")));
}

TEST_CASE("generate maps invalid parameters to exit code 3") {
  TempDir dir;
  CHECK(cli({"generate", "--n", "2", "--output-dir", dir.path.string()}) ==
        kExitInvalidParameter);
}

TEST_CASE("transform emits the documented sizes and sidecars") {
  TempDir dir;
  REQUIRE(cli({"generate", "--count", "1", "--seed", "8", "--output-dir",
               dir.path.string()}) == kExitOk);
  const std::string cnf = dir.str("instance_0000.cnf");

  CHECK(cli({"transform", "--input", cnf, "--method", "chancellorJ5"}) == kExitOk);
  const Qubo j5 = qubo_from_json(
      read_text_file(dir.str("instance_0000.chancellorJ5.qubo.json")));
  CHECK(j5.dimension() == 57);

  CHECK(cli({"transform", "--input", cnf, "--method", "choi"}) == kExitOk);
  const Qubo choi = qubo_from_json(
      read_text_file(dir.str("instance_0000.choi.qubo.json")));
  CHECK(choi.dimension() == 138);

  // The sidecar rebuilds a decodable output.
  const CnfFormula f = read_dimacs_file(cnf);
  const TransformOutput rebuilt = transform_output_from_map(
      read_text_file(dir.str("instance_0000.choi.map.json")), f);
  CHECK(rebuilt.qubo == choi);
}

TEST_CASE("modchancellor with the neutral multiplier equals chancellorJ1") {
  TempDir dir;
  REQUIRE(cli({"generate", "--count", "1", "--seed", "12", "--output-dir",
               dir.path.string()}) == kExitOk);
  const std::string cnf = dir.str("instance_0000.cnf");
  CHECK(cli({"transform", "--input", cnf, "--method", "chancellorJ1"}) == kExitOk);
  CHECK(cli({"transform", "--input", cnf, "--method", "modchancellor",
             "--multipliers", "1"}) == kExitOk);
  CHECK(qubo_from_json(read_text_file(
            dir.str("instance_0000.modchancellor.qubo.json"))) ==
        qubo_from_json(read_text_file(
            dir.str("instance_0000.chancellorJ1.qubo.json"))));
}

TEST_CASE("transform rejects unknown methods and misplaced flags") {
  TempDir dir;
  REQUIRE(cli({"generate", "--count", "1", "--output-dir",
               dir.path.string()}) == kExitOk);
  const std::string cnf = dir.str("instance_0000.cnf");
  CHECK(cli({"transform", "--input", cnf, "--method", "unknown"}) == kExitUsage);
  CHECK(cli({"transform", "--input", cnf, "--method", "chancellorJ1", "--j",
             "3"}) == kExitInvalidParameter);
  CHECK(cli({"transform", "--input", dir.str("missing.cnf"), "--method",
             "choi"}) == kExitIo);
}

TEST_CASE("solve runs both backends and verdicts against the CNF") {
  TempDir dir;
  REQUIRE(cli({"generate", "--n", "5", "--m", "8", "--count", "1", "--seed",
               "4", "--output-dir", dir.path.string()}) == kExitOk);
  const std::string cnf = dir.str("instance_0000.cnf");
  REQUIRE(cli({"transform", "--input", cnf, "--method", "nuesslein"}) == kExitOk);
  const std::string qubo = dir.str("instance_0000.nuesslein.qubo.json");

  CHECK(cli({"solve", "--qubo", qubo, "--backend", "brute"}) == kExitOk);
  const SampleSet brute = sample_set_from_json(
      read_text_file(dir.str("instance_0000.nuesslein.samples.json")));
  CHECK(brute.solver_info.backend == "brute");
  REQUIRE(!brute.samples.empty());

  CHECK(cli({"solve", "--qubo", qubo, "--backend", "sa", "--reads", "50",
             "--sweeps", "200", "--cnf", cnf}) == kExitOk);
  const SampleSet sa = sample_set_from_json(
      read_text_file(dir.str("instance_0000.nuesslein.samples.json")));
  CHECK(sa.total_reads() == 50);
  CHECK(sa.best().energy >= brute.best().energy);
}

TEST_CASE("solve reports usage and io errors distinctly") {
  TempDir dir;
  CHECK(cli({"solve"}) == kExitUsage);                       // missing --qubo
  CHECK(cli({"solve", "--qubo", dir.str("absent.qubo.json")}) == kExitIo);
  write_text_file(dir.str("bad.qubo.json"), "{not json");
  CHECK(cli({"solve", "--qubo", dir.str("bad.qubo.json")}) == kExitParse);
}

TEST_CASE("analyze corpus mode writes metric tables") {
  TempDir dir;
  CHECK(cli({"analyze", "--method", "chancellorJ1", "--count", "4", "--n",
             "11", "--m", "46", "--seed", "21", "--output-dir",
             dir.path.string()}) == kExitOk);
  const std::string csv = read_text_file(dir.str("metrics_chancellorJ1.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4 + 6);
  CHECK(cli({"analyze"}) == kExitInvalidParameter);
}

TEST_CASE("bench writes reports and reruns byte-identically") {
  TempDir a, b;
  const std::initializer_list<std::string> args_a{
      "bench", "--instances", "3", "--n", "6", "--m", "12", "--reads", "20",
      "--sweeps", "100", "--methods", "chancellorJ1", "--methods", "nuesslein",
      "--seed", "77", "--output-dir", a.path.string()};
  const std::initializer_list<std::string> args_b{
      "bench", "--instances", "3", "--n", "6", "--m", "12", "--reads", "20",
      "--sweeps", "100", "--methods", "chancellorJ1", "--methods", "nuesslein",
      "--seed", "77", "--output-dir", b.path.string()};
  CHECK(cli(args_a) == kExitOk);
  CHECK(cli(args_b) == kExitOk);
  CHECK(read_text_file(a.str("report.json")) == read_text_file(b.str("report.json")));
  CHECK(read_text_file(a.str("report.csv")) == read_text_file(b.str("report.csv")));

  // Artifacts exist and re-read through their own parsers.
  const BenchmarkReport report = report_from_json(read_text_file(a.str("report.json")));
  CHECK(report.transforms.size() == 2);
  const CnfFormula f =
      read_dimacs_file((a.path / "instances" / "instance_0000.cnf").string());
  CHECK(f.num_clauses() == 12);
  const Qubo q = qubo_from_json(read_text_file(
      (a.path / "qubos" / "chancellorJ1" / "instance_0000.qubo.json").string()));
  CHECK(q.dimension() == 18);
}

TEST_CASE("bench accepts a config file") {
  TempDir dir;
  ExperimentConfig cfg;
  cfg.num_instances = 2;
  cfg.num_variables = 5;
  cfg.num_clauses = 8;
  cfg.seed = 13;
  cfg.reads_per_instance = 10;
  cfg.transforms = {transform_spec_from_label("nuesslein")};
  cfg.schedule = AnnealSchedule{80, 0.05, 10.0};
  const std::string config_path = dir.str("config.json");
  write_text_file(config_path, experiment_config_to_json(cfg));
  CHECK(cli({"bench", "--config", config_path, "--no-artifacts",
             "--output-dir", dir.path.string()}) == kExitOk);
  const BenchmarkReport report =
      report_from_json(read_text_file(dir.str("report.json")));
  CHECK(report.config.num_instances == 2);
  CHECK(report.transforms[0].label == "nuesslein");
}

TEST_CASE("unknown flags are rejected") {
  CHECK(cli({"generate", "--frobnicate"}) == kExitUsage);
  CHECK(cli({"nonsense"}) == kExitUsage);
}
