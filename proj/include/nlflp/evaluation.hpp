#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlflp/multiplex.hpp"
#include "nlflp/predictor.hpp"
#include "nlflp/similarity.hpp"

namespace nlflp {

// How target-layer edges are divided into training and held-out test sets.
struct SplitSpec {
  enum class Mode { Fraction, Count };
  Mode mode = Mode::Fraction;
  double holdout_fraction = 0.1;  // used in Fraction mode
  std::size_t holdout_count = 0;  // used in Count mode
  std::size_t trials = 20;
  std::uint64_t seed = 42;
};

struct Split {
  PairSet training;
  PairSet test;
};

// Uniform random holdout of target-layer edges, without replacement.
// Deterministic in (spec.seed, trial_index); predictor layers are never
// touched. Fraction mode rounds |E|*fraction to the nearest integer and
// clamps into [1, |E|-1]; Count mode requires 1 <= count < |E|.
Split split_edges(const MultiplexNetwork& net, int target,
                  const SplitSpec& spec, std::size_t trial_index);

// Scores keyed by pair for O(log n) lookup; pairs not present score 0.
class PairScoreMap {
 public:
  explicit PairScoreMap(const ScoreTable& table);
  explicit PairScoreMap(const RankedPrediction& ranking);

  double at_or_zero(Pair p) const;
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<Pair> pairs_;
  std::vector<double> values_;
};

struct AucResult {
  double auc = 0.0;
  std::uint64_t alpha = 0;  // comparisons made
  std::uint64_t beta = 0;   // test edge scored strictly higher
  std::uint64_t gamma = 0;  // tie
};

// AUC = (beta + 0.5*gamma) / alpha over sampled (test edge, non-edge)
// comparisons. Both pools must be nonempty and comparisons >= 1.
AucResult auc_sampled(const PairScoreMap& scores, const PairSet& test,
                      const PairSet& non_edges, std::uint64_t comparisons,
                      std::uint64_t seed);

// Same statistic over every (test, non-edge) combination.
AucResult auc_exhaustive(const PairScoreMap& scores, const PairSet& test,
                         const PairSet& non_edges);

// Fraction of the top_n ranked candidates that are held-out test edges.
// Requires 1 <= top_n <= number of ranked entries.
double precision_at(const RankedPrediction& ranking, const PairSet& test,
                    std::size_t top_n);

// Prediction methods the benchmark can compare. The cross-layer method
// uses every layer; baselines see only the target layer's training graph.
enum class Method { NLFLP, CN, JC, AA, LHN, HDI };

std::string method_name(Method method);
std::optional<Method> parse_method(const std::string& name);
const std::vector<Method>& all_methods();

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t split_seed = 0;
  std::size_t training_size = 0;
  std::size_t test_size = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;
  double auc = 0.0;
  double precision = 0.0;
};

struct EvaluationResult {
  Method method = Method::NLFLP;
  std::vector<TrialRecord> per_trial;
  double auc_mean = 0.0;
  double auc_std = 0.0;  // sample standard deviation (n-1)
  double precision_mean = 0.0;
  double precision_std = 0.0;
  bool single_layer_warning = false;
};

// Repeated-trial evaluation: per trial, split the target layer, score the
// candidate pairs (all pairs minus training edges) with each method, then
// measure sampled AUC against the full non-edge pool and Precision at
// |test|. Deterministic in spec.seed.
std::vector<EvaluationResult> run_benchmark(const MultiplexNetwork& net,
                                            const PredictionConfig& config,
                                            const SplitSpec& spec,
                                            const std::vector<Method>& methods,
                                            std::uint64_t auc_comparisons = 10000);

}  // namespace nlflp
