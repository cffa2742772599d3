#include "satqubo/serialization.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "satqubo/errors.hpp"

namespace satqubo {

namespace {

using nlohmann::json;

// Shortest representation that parses back to the same double.
std::string format_double(double value) { return json(value).dump(); }

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

std::vector<std::uint8_t> bits_from_string(const std::string& s) {
  std::vector<std::uint8_t> bits(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError("bits must be 0/1");
    bits[i] = s[i] == '1' ? 1 : 0;
  }
  return bits;
}

json schedule_to_json(const AnnealSchedule& schedule) {
  return json{{"num_sweeps", schedule.num_sweeps},
              {"beta_start", schedule.beta_start},
              {"beta_end", schedule.beta_end}};
}

AnnealSchedule schedule_from_json(const json& j) {
  AnnealSchedule s;
  s.num_sweeps = j.at("num_sweeps").get<int>();
  s.beta_start = j.at("beta_start").get<double>();
  s.beta_end = j.at("beta_end").get<double>();
  return s;
}

json metrics_to_json_value(const StructureMetrics& m) {
  return json{{"dimension", m.dimension},
              {"num_distinct_quadratic", m.num_distinct_quadratic},
              {"num_distinct_linear", m.num_distinct_linear},
              {"quadratic_range_size", m.quadratic_range_size},
              {"linear_range_size", m.linear_range_size},
              {"scale_factor", m.scale_factor},
              {"density", m.density}};
}

StructureMetrics metrics_from_json_value(const json& j) {
  StructureMetrics m;
  m.dimension = j.at("dimension").get<int>();
  m.num_distinct_quadratic = j.at("num_distinct_quadratic").get<int>();
  m.num_distinct_linear = j.at("num_distinct_linear").get<int>();
  m.quadratic_range_size = j.at("quadratic_range_size").get<double>();
  m.linear_range_size = j.at("linear_range_size").get<double>();
  m.scale_factor = j.at("scale_factor").get<double>();
  m.density = j.at("density").get<double>();
  return m;
}

json spec_to_json(const TransformSpec& spec) {
  json j{{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
    case TransformKind::kChoi:
      j["vertex_weight"] = spec.vertex_weight;
      j["edge_weight"] = spec.edge_weight;
      break;
    case TransformKind::kChancellor:
      j["coupling"] = spec.coupling;
      break;
    case TransformKind::kNuesslein:
      break;
    case TransformKind::kModifiedChancellor:
      j["coupling"] = spec.coupling;
      j["multipliers"] = spec.multipliers.empty() ? kDefaultMultipliers
                                                  : spec.multipliers;
      break;
  }
  return j;
}

TransformSpec spec_from_json(const json& j) {
  if (j.contains("method")) {
    return transform_spec_from_label(j.at("method").get<std::string>());
  }
  TransformSpec spec;
  spec.kind = transform_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("coupling")) spec.coupling = j.at("coupling").get<double>();
  if (j.contains("vertex_weight")) {
    spec.vertex_weight = j.at("vertex_weight").get<double>();
  }
  if (j.contains("edge_weight")) {
    spec.edge_weight = j.at("edge_weight").get<double>();
  }
  if (j.contains("multipliers")) {
    spec.multipliers = j.at("multipliers").get<std::vector<double>>();
  }
  return spec;
}

json config_to_json_value(const ExperimentConfig& cfg) {
  json transforms = json::array();
  for (const TransformSpec& spec : cfg.transforms) {
    transforms.push_back(spec_to_json(spec));
  }
  json j{{"num_instances", cfg.num_instances},
         {"num_variables", cfg.num_variables},
         {"num_clauses", cfg.num_clauses},
         {"seed", cfg.seed},
         {"reads_per_instance", cfg.reads_per_instance},
         {"transforms", transforms},
         {"apply_scaling", cfg.apply_scaling},
         {"jobs", cfg.jobs}};
  j["schedule"] = cfg.schedule ? schedule_to_json(*cfg.schedule) : json();
  return j;
}

ExperimentConfig config_from_json_value(const json& j) {
  ExperimentConfig cfg;
  cfg.num_instances = j.at("num_instances").get<int>();
  cfg.num_variables = j.at("num_variables").get<int>();
  cfg.num_clauses = j.at("num_clauses").get<int>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.reads_per_instance = j.at("reads_per_instance").get<int>();
  cfg.transforms.clear();
  for (const json& spec : j.at("transforms")) {
    cfg.transforms.push_back(spec_from_json(spec));
  }
  if (j.contains("schedule") && !j.at("schedule").is_null()) {
    cfg.schedule = schedule_from_json(j.at("schedule"));
  }
  if (j.contains("apply_scaling")) {
    cfg.apply_scaling = j.at("apply_scaling").get<bool>();
  }
  if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
  return cfg;
}

}  // namespace

std::string qubo_to_json(const Qubo& qubo) {
  json terms = json::array();
  for (const auto& [key, value] : qubo.terms()) {
    terms.push_back(json::array({key.first, key.second, value}));
  }
  return json{{"dimension", qubo.dimension()}, {"terms", terms}}.dump(2) + "\n";
}

Qubo qubo_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("dimension") || !j.contains("terms")) {
    throw ParseError("QUBO JSON needs 'dimension' and 'terms'");
  }
  Qubo qubo(j.at("dimension").get<int>());
  for (const json& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 3) {
      throw ParseError("each term must be [i, j, value]");
    }
    const int i = term[0].get<int>();
    const int k = term[1].get<int>();
    if (i > k) throw ParseError("lower-triangular entry rejected");
    if (i < 0 || k >= qubo.dimension()) throw ParseError("index out of range");
    if (qubo.coefficient(i, k) != 0.0) throw ParseError("duplicate entry");
    qubo.set_coefficient(i, k, term[2].get<double>());
  }
  return qubo;
}

std::string transform_map_to_json(const TransformOutput& output) {
  json params;
  switch (output.kind) {
    case TransformKind::kChoi:
      params["vertex_weight"] = output.params.vertex_weight;
      params["edge_weight"] = output.params.edge_weight;
      break;
    case TransformKind::kChancellor:
      params["coupling"] = output.params.coupling;
      break;
    case TransformKind::kNuesslein:
      params = json::object();
      break;
    case TransformKind::kModifiedChancellor:
      params["coupling"] = output.params.coupling;
      params["multipliers"] = output.params.multipliers;
      params["seed"] = output.params.seed;
      break;
  }
  json j{{"kind", to_string(output.kind)},
         {"n", output.num_variables},
         {"m", output.num_clauses},
         {"params", params}};
  return j.dump(2) + "\n";
}

TransformOutput transform_output_from_map(const std::string& map_json,
                                          const CnfFormula& formula) {
  const json j = parse(map_json);
  const TransformKind kind =
      transform_kind_from_string(j.at("kind").get<std::string>());
  if (j.at("n").get<int>() != formula.num_variables ||
      j.at("m").get<int>() != formula.num_clauses()) {
    throw InvalidParameterError("sidecar map does not match formula size");
  }
  const json& params = j.at("params");
  switch (kind) {
    case TransformKind::kChoi:
      return choi_transform(formula, params.at("vertex_weight").get<double>(),
                            params.at("edge_weight").get<double>());
    case TransformKind::kChancellor:
      return chancellor_transform(formula, params.at("coupling").get<double>());
    case TransformKind::kNuesslein:
      return nuesslein_transform(formula);
    case TransformKind::kModifiedChancellor:
      return modified_chancellor_transform(
          formula, params.at("coupling").get<double>(),
          params.at("multipliers").get<std::vector<double>>(),
          params.at("seed").get<std::uint64_t>());
  }
  throw ParseError("unknown transform kind in map");
}

std::string sample_set_to_json(const SampleSet& set) {
  json reads = json::array();
  for (const SampleRecord& record : set.samples) {
    reads.push_back(json{{"bits", bits_to_string(record.bits)},
                         {"energy", record.energy},
                         {"count", record.count}});
  }
  json j{{"backend", set.solver_info.backend},
         {"seed", set.solver_info.seed},
         {"schedule", schedule_to_json(set.solver_info.schedule)},
         {"reads", reads}};
  return j.dump(2) + "\n";
}

SampleSet sample_set_from_json(const std::string& text) {
  const json j = parse(text);
  SampleSet set;
  set.solver_info.backend = j.at("backend").get<std::string>();
  set.solver_info.seed = j.at("seed").get<std::uint64_t>();
  set.solver_info.schedule = schedule_from_json(j.at("schedule"));
  for (const json& read : j.at("reads")) {
    set.samples.push_back(SampleRecord{
        bits_from_string(read.at("bits").get<std::string>()),
        read.at("energy").get<double>(), read.at("count").get<int>()});
  }
  return set;
}

std::string experiment_config_to_json(const ExperimentConfig& config) {
  return config_to_json_value(config).dump(2) + "\n";
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  return config_from_json_value(parse(text));
}

std::string report_to_json(const BenchmarkReport& report) {
  json transforms = json::array();
  for (const TransformReport& arm : report.transforms) {
    json instances = json::array();
    for (const InstanceResult& row : arm.instances) {
      json r{{"instance_id", row.instance_id},
             {"min_energy", row.min_energy},
             {"num_correct_reads", row.num_correct_reads},
             {"metrics", metrics_to_json_value(row.metrics)}};
      if (row.reference_metrics) {
        r["reference_metrics"] = metrics_to_json_value(*row.reference_metrics);
      }
      instances.push_back(r);
    }
    transforms.push_back(json{{"label", arm.label},
                              {"solved_instances", arm.solved_instances},
                              {"correct_solutions", arm.correct_solutions},
                              {"solved_percent", arm.solved_percent},
                              {"correct_percent", arm.correct_percent},
                              {"instances", instances}});
  }
  json j{{"config", config_to_json_value(report.config)},
         {"transforms", transforms}};
  return j.dump(2) + "\n";
}

BenchmarkReport report_from_json(const std::string& text) {
  const json j = parse(text);
  BenchmarkReport report;
  report.config = config_from_json_value(j.at("config"));
  for (const json& arm_json : j.at("transforms")) {
    TransformReport arm;
    arm.label = arm_json.at("label").get<std::string>();
    arm.solved_instances = arm_json.at("solved_instances").get<int>();
    arm.correct_solutions = arm_json.at("correct_solutions").get<long long>();
    arm.solved_percent = arm_json.at("solved_percent").get<double>();
    arm.correct_percent = arm_json.at("correct_percent").get<double>();
    for (const json& row_json : arm_json.at("instances")) {
      InstanceResult row;
      row.instance_id = row_json.at("instance_id").get<int>();
      row.min_energy = row_json.at("min_energy").get<double>();
      row.num_correct_reads = row_json.at("num_correct_reads").get<int>();
      row.metrics = metrics_from_json_value(row_json.at("metrics"));
      if (row_json.contains("reference_metrics")) {
        row.reference_metrics =
            metrics_from_json_value(row_json.at("reference_metrics"));
      }
      arm.instances.push_back(std::move(row));
    }
    report.transforms.push_back(std::move(arm));
  }
  return report;
}

std::string report_to_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "transform,row,instance_id,min_energy,num_correct_reads,dimension,"
         "num_distinct_quadratic,num_distinct_linear,quadratic_range_size,"
         "linear_range_size,scale_factor,density,ref_num_distinct_quadratic,"
         "ref_quadratic_range_size,solved_instances,correct_solutions,"
         "solved_percent,correct_percent\n";
  for (const TransformReport& arm : report.transforms) {
    for (const InstanceResult& row : arm.instances) {
      out << arm.label << ",instance," << row.instance_id << ','
          << format_double(row.min_energy) << ',' << row.num_correct_reads
          << ',' << row.metrics.dimension << ','
          << row.metrics.num_distinct_quadratic << ','
          << row.metrics.num_distinct_linear << ','
          << format_double(row.metrics.quadratic_range_size) << ','
          << format_double(row.metrics.linear_range_size) << ','
          << format_double(row.metrics.scale_factor) << ','
          << format_double(row.metrics.density) << ',';
      if (row.reference_metrics) {
        out << row.reference_metrics->num_distinct_quadratic << ','
            << format_double(row.reference_metrics->quadratic_range_size);
      } else {
        out << ',';
      }
      out << ",,,,\n";
    }
    out << arm.label << ",summary,,,,,,,,,,,,,"
        << arm.solved_instances << ',' << arm.correct_solutions << ','
        << format_double(arm.solved_percent) << ','
        << format_double(arm.correct_percent) << '\n';
  }
  return out.str();
}

std::string corpus_analysis_to_csv(const CorpusAnalysis& analysis) {
  std::ostringstream out;
  out << "transform,row,instance_id,dimension,num_distinct_quadratic,"
         "num_distinct_linear,quadratic_range_size,linear_range_size,"
         "scale_factor,density\n";
  for (std::size_t i = 0; i < analysis.rows.size(); ++i) {
    const StructureMetrics& m = analysis.rows[i];
    out << analysis.label << ",instance," << i << ',' << m.dimension << ','
        << m.num_distinct_quadratic << ',' << m.num_distinct_linear << ','
        << format_double(m.quadratic_range_size) << ','
        << format_double(m.linear_range_size) << ','
        << format_double(m.scale_factor) << ',' << format_double(m.density)
        << '\n';
  }
  const auto summary_row = [&](const std::string& stat, double dq, double dl,
                               double rq, double rl) {
    out << analysis.label << ',' << stat << ",,," << format_double(dq) << ','
        << format_double(dl) << ',' << format_double(rq) << ','
        << format_double(rl) << ",,\n";
  };
  summary_row("min", analysis.distinct_quadratic.min,
              analysis.distinct_linear.min, analysis.quadratic_range.min,
              analysis.linear_range.min);
  summary_row("q1", analysis.distinct_quadratic.q1, analysis.distinct_linear.q1,
              analysis.quadratic_range.q1, analysis.linear_range.q1);
  summary_row("median", analysis.distinct_quadratic.median,
              analysis.distinct_linear.median, analysis.quadratic_range.median,
              analysis.linear_range.median);
  summary_row("q3", analysis.distinct_quadratic.q3, analysis.distinct_linear.q3,
              analysis.quadratic_range.q3, analysis.linear_range.q3);
  summary_row("max", analysis.distinct_quadratic.max,
              analysis.distinct_linear.max, analysis.quadratic_range.max,
              analysis.linear_range.max);
  summary_row("mean", analysis.distinct_quadratic.mean,
              analysis.distinct_linear.mean, analysis.quadratic_range.mean,
              analysis.linear_range.mean);
  return out.str();
}

std::string corpus_analysis_to_json(const CorpusAnalysis& analysis) {
  const auto quartiles = [](const Quartiles& q) {
    return json{{"min", q.min}, {"q1", q.q1},   {"median", q.median},
                {"q3", q.q3},   {"max", q.max}, {"mean", q.mean}};
  };
  json rows = json::array();
  for (const StructureMetrics& m : analysis.rows) {
    rows.push_back(metrics_to_json_value(m));
  }
  json j{{"label", analysis.label},
         {"rows", rows},
         {"summaries",
          json{{"num_distinct_quadratic", quartiles(analysis.distinct_quadratic)},
               {"num_distinct_linear", quartiles(analysis.distinct_linear)},
               {"quadratic_range_size", quartiles(analysis.quadratic_range)},
               {"linear_range_size", quartiles(analysis.linear_range)}}}};
  return j.dump(2) + "\n";
}

std::string metrics_to_json(const StructureMetrics& metrics) {
  return metrics_to_json_value(metrics).dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path + " (" + ec.message() + ")");
}

}  // namespace satqubo
