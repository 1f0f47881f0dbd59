#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlflp/evaluation.hpp"
#include "nlflp/interlayer.hpp"
#include "nlflp/multiplex.hpp"
#include "nlflp/predictor.hpp"

namespace nlflp {

// Raised for unreadable, unwritable, or malformed input; distinct from
// configuration errors so the CLI can map it to its own exit code.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a multiplex edge list: lines of "layer u v [weight]" separated by
// whitespace, '#' comment lines and blank lines ignored, default weight 1.
// Node labels and layer ids may be arbitrary integers; both are remapped
// densely (in ascending numeric order, so the result is independent of
// line order) and the original values are retained as labels/layer names.
// Throws io_error with a line number on malformed input, and "no edges"
// when nothing remains after skipping comments.
MultiplexNetwork load_multiplex_edgelist(std::istream& in,
                                         const std::string& source = "<stream>");
MultiplexNetwork load_multiplex_edgelist(const std::string& path);

// Writes the network in the loader's grammar, one edge per line in
// (layer, pair) order, using the stored labels and layer names.
void write_multiplex_edgelist(const MultiplexNetwork& net, std::ostream& out);
void write_multiplex_edgelist(const MultiplexNetwork& net, const std::string& path);

// Correlated multiplex generator. Layer 0 is a uniform random graph whose
// density is target_layer_density when set, base_density otherwise. Every
// other layer keeps each layer-0 edge with probability
// interlayer_correlation, then adds uniformly chosen noise edges until it
// reaches base_density. Weights are uniform in [1,5]. Deterministic in
// seed.
struct SyntheticSpec {
  std::size_t nodes = 500;
  std::size_t layers = 3;
  double base_density = 0.02;
  double interlayer_correlation = 0.8;
  std::optional<double> target_layer_density;
  std::uint64_t seed = 42;
};

MultiplexNetwork generate_synthetic(const SyntheticSpec& spec);

enum class OutputFormat { CSV, JSON };
std::string format_name(OutputFormat format);
std::optional<OutputFormat> parse_format(const std::string& name);

// Shortest decimal form that parses back to the same double.
std::string fmt_double(double value);

// Ranked predictions. The CSV form is rank,u,v,label_u,label_v,score in
// ranking order; JSON adds method and target layer so it round-trips to
// an identical structure. Labels come from `labels` when given, else the
// node ids themselves.
void write_ranking(const RankedPrediction& ranking, OutputFormat format,
                   std::ostream& out, const MultiplexNetwork* labels = nullptr);
void write_ranking(const RankedPrediction& ranking, OutputFormat format,
                   const std::string& path, const MultiplexNetwork* labels = nullptr);
RankedPrediction read_ranking_json(std::istream& in);
RankedPrediction read_ranking_json(const std::string& path);
RankedPrediction read_ranking_csv(std::istream& in);
RankedPrediction read_ranking_csv(const std::string& path);

// Benchmark output. CSV: one row per (method, trial) under a header.
// JSON: self-describing document with the run configuration, per-trial
// rows, and aggregates.
struct EvaluationContext {
  std::string input;
  int target_layer = 0;
  SimilarityIndex base_method = SimilarityIndex::CN;
  bool rho_damping = true;
  SplitSpec split;
  std::uint64_t auc_comparisons = 10000;
};

void write_evaluation(const std::vector<EvaluationResult>& results,
                      const EvaluationContext& context, OutputFormat format,
                      std::ostream& out);
void write_evaluation(const std::vector<EvaluationResult>& results,
                      const EvaluationContext& context, OutputFormat format,
                      const std::string& path);

// Interlayer report. CSV rows are metric,i,j,value (j empty for per-layer
// rows, "nan" for undefined entries); JSON uses null for undefined.
void write_layer_report(const LayerSimilarityReport& report, OutputFormat format,
                        std::ostream& out);
void write_layer_report(const LayerSimilarityReport& report, OutputFormat format,
                        const std::string& path);

}  // namespace nlflp
