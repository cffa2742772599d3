#pragma once

#include <string>

#include "satqubo/bench.hpp"
#include "satqubo/qubo.hpp"
#include "satqubo/sampler.hpp"
#include "satqubo/transforms.hpp"

namespace satqubo {

// QUBO file format: {"dimension": d, "terms": [[i, j, value], ...]} with
// i <= j; the reader rejects lower-triangular, out-of-range and duplicate
// entries.
std::string qubo_to_json(const Qubo& qubo);
Qubo qubo_from_json(const std::string& text);

// Sidecar map describing a transform output:
// {"kind": ..., "n": ..., "m": ..., "params": {...}} plus the Choi node
// labels when applicable.
std::string transform_map_to_json(const TransformOutput& output);

// Rebuilds decode bookkeeping from a sidecar map plus the formula it was
// created from. The returned output's QUBO is reconstructed from the formula
// and parameters.
TransformOutput transform_output_from_map(const std::string& map_json,
                                          const CnfFormula& formula);

// {"backend": ..., "seed": ..., "schedule": {...}, "reads": [{"bits":
// "0101...", "energy": e, "count": k}]}. Wall time is not serialized.
std::string sample_set_to_json(const SampleSet& set);
SampleSet sample_set_from_json(const std::string& text);

std::string experiment_config_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const std::string& text);

std::string report_to_json(const BenchmarkReport& report);
BenchmarkReport report_from_json(const std::string& text);

// One data row per (transform, instance) plus one summary row per transform.
std::string report_to_csv(const BenchmarkReport& report);

// One metrics row per instance plus summary rows per statistic.
std::string corpus_analysis_to_csv(const CorpusAnalysis& analysis);
std::string corpus_analysis_to_json(const CorpusAnalysis& analysis);

std::string metrics_to_json(const StructureMetrics& metrics);

// Whole-file helpers. Writes go through a temporary file plus rename, so a
// crash never leaves a half-written artifact.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace satqubo
