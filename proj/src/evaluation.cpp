#include "nlflp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nlflp/rng.hpp"

namespace nlflp {
namespace {

SimilarityIndex baseline_index(Method method) {
  switch (method) {
    case Method::CN: return SimilarityIndex::CN;
    case Method::JC: return SimilarityIndex::JC;
    case Method::AA: return SimilarityIndex::AA;
    case Method::LHN: return SimilarityIndex::LHN;
    case Method::HDI: return SimilarityIndex::HDI;
    case Method::NLFLP: break;
  }
  throw std::invalid_argument("method has no baseline similarity index");
}

// Streams 0..trials-1 feed the splits; AUC sampling gets its own block,
// keyed by method so the per-method numbers do not depend on the order
// methods are listed in.
std::uint64_t auc_stream(std::size_t trial, Method method) {
  return (std::uint64_t{1} << 32) | (static_cast<std::uint64_t>(trial) << 8) |
         static_cast<std::uint64_t>(method);
}

void aggregate(EvaluationResult& r) {
  const std::size_t n = r.per_trial.size();
  if (n == 0) return;
  double auc_sum = 0.0, prec_sum = 0.0;
  for (const TrialRecord& t : r.per_trial) {
    auc_sum += t.auc;
    prec_sum += t.precision;
  }
  r.auc_mean = auc_sum / static_cast<double>(n);
  r.precision_mean = prec_sum / static_cast<double>(n);
  if (n > 1) {
    double auc_sq = 0.0, prec_sq = 0.0;
    for (const TrialRecord& t : r.per_trial) {
      auc_sq += (t.auc - r.auc_mean) * (t.auc - r.auc_mean);
      prec_sq += (t.precision - r.precision_mean) * (t.precision - r.precision_mean);
    }
    r.auc_std = std::sqrt(auc_sq / static_cast<double>(n - 1));
    r.precision_std = std::sqrt(prec_sq / static_cast<double>(n - 1));
  }
}

}  // namespace

Split split_edges(const MultiplexNetwork& net, int target,
                  const SplitSpec& spec, std::size_t trial_index) {
  if (spec.trials < 1) {
    throw std::invalid_argument("split needs at least one trial");
  }
  if (trial_index >= spec.trials) {
    throw std::invalid_argument("trial index exceeds trial count");
  }
  const LayerGraph& g = net.layer(target);
  const std::size_t m = g.edge_count();
  std::size_t holdout = 0;
  if (spec.mode == SplitSpec::Mode::Fraction) {
    if (!(spec.holdout_fraction > 0.0 && spec.holdout_fraction < 1.0)) {
      throw std::invalid_argument("holdout fraction must lie in (0,1)");
    }
    if (m < 2) {
      throw std::invalid_argument("target layer needs at least 2 edges to split");
    }
    auto rounded = static_cast<std::size_t>(
        std::llround(spec.holdout_fraction * static_cast<double>(m)));
    holdout = std::clamp<std::size_t>(rounded, 1, m - 1);
  } else {
    if (spec.holdout_count < 1) {
      throw std::invalid_argument("holdout count must be at least 1");
    }
    if (spec.holdout_count >= m) {
      throw std::invalid_argument("holdout count must be smaller than the edge count");
    }
    holdout = spec.holdout_count;
  }

  // Partial Fisher-Yates over the canonical edge order: the first
  // `holdout` slots become the test set.
  std::vector<Pair> edges = g.edge_set().pairs();
  Rng rng(derive_seed(spec.seed, trial_index));
  for (std::size_t i = 0; i < holdout; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
    std::swap(edges[i], edges[j]);
  }
  Split split;
  split.test = PairSet(std::vector<Pair>(edges.begin(),
                                         edges.begin() + static_cast<std::ptrdiff_t>(holdout)));
  split.training = PairSet(std::vector<Pair>(edges.begin() + static_cast<std::ptrdiff_t>(holdout),
                                             edges.end()));
  return split;
}

PairScoreMap::PairScoreMap(const ScoreTable& table)
    : pairs_(table.pairs()), values_(table.values()) {}

PairScoreMap::PairScoreMap(const RankedPrediction& ranking) {
  std::vector<std::size_t> order(ranking.entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return ranking.entries[i].pair < ranking.entries[j].pair;
  });
  pairs_.reserve(order.size());
  values_.reserve(order.size());
  for (std::size_t i : order) {
    pairs_.push_back(ranking.entries[i].pair);
    values_.push_back(ranking.entries[i].score);
  }
}

double PairScoreMap::at_or_zero(Pair p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return 0.0;
  return values_[static_cast<std::size_t>(it - pairs_.begin())];
}

AucResult auc_sampled(const PairScoreMap& scores, const PairSet& test,
                      const PairSet& non_edges, std::uint64_t comparisons,
                      std::uint64_t seed) {
  if (test.empty() || non_edges.empty()) {
    throw std::invalid_argument("AUC needs nonempty test and non-edge pools");
  }
  if (comparisons < 1) {
    throw std::invalid_argument("AUC needs at least one comparison");
  }
  Rng rng(seed);
  AucResult r;
  r.alpha = comparisons;
  for (std::uint64_t c = 0; c < comparisons; ++c) {
    const Pair& te = test[static_cast<std::size_t>(rng.below(test.size()))];
    const Pair& ne = non_edges[static_cast<std::size_t>(rng.below(non_edges.size()))];
    double st = scores.at_or_zero(te);
    double sn = scores.at_or_zero(ne);
    if (st > sn) {
      ++r.beta;
    } else if (st == sn) {
      ++r.gamma;
    }
  }
  r.auc = (static_cast<double>(r.beta) + 0.5 * static_cast<double>(r.gamma)) /
          static_cast<double>(r.alpha);
  return r;
}

AucResult auc_exhaustive(const PairScoreMap& scores, const PairSet& test,
                         const PairSet& non_edges) {
  if (test.empty() || non_edges.empty()) {
    throw std::invalid_argument("AUC needs nonempty test and non-edge pools");
  }
  AucResult r;
  r.alpha = static_cast<std::uint64_t>(test.size()) * non_edges.size();
  for (const Pair& te : test) {
    double st = scores.at_or_zero(te);
    for (const Pair& ne : non_edges) {
      double sn = scores.at_or_zero(ne);
      if (st > sn) {
        ++r.beta;
      } else if (st == sn) {
        ++r.gamma;
      }
    }
  }
  r.auc = (static_cast<double>(r.beta) + 0.5 * static_cast<double>(r.gamma)) /
          static_cast<double>(r.alpha);
  return r;
}

double precision_at(const RankedPrediction& ranking, const PairSet& test,
                    std::size_t top_n) {
  if (top_n < 1) {
    throw std::invalid_argument("precision depth must be at least 1");
  }
  if (top_n > ranking.entries.size()) {
    throw std::invalid_argument("precision depth exceeds ranked candidate count");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < top_n; ++i) {
    if (test.contains(ranking.entries[i].pair)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(top_n);
}

std::string method_name(Method method) {
  switch (method) {
    case Method::NLFLP: return "nlflp";
    case Method::CN: return "cn";
    case Method::JC: return "jc";
    case Method::AA: return "aa";
    case Method::LHN: return "lhn";
    case Method::HDI: return "hdi";
  }
  throw std::invalid_argument("unknown method");
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "nlflp") return Method::NLFLP;
  if (name == "cn") return Method::CN;
  if (name == "jc") return Method::JC;
  if (name == "aa") return Method::AA;
  if (name == "lhn") return Method::LHN;
  if (name == "hdi") return Method::HDI;
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::NLFLP, Method::CN, Method::JC,
                                           Method::AA,    Method::LHN, Method::HDI};
  return methods;
}

std::vector<EvaluationResult> run_benchmark(const MultiplexNetwork& net,
                                            const PredictionConfig& config,
                                            const SplitSpec& spec,
                                            const std::vector<Method>& methods,
                                            std::uint64_t auc_comparisons) {
  const int target = config.target_layer;
  const PairSet universe = net.universal_pairs();
  const PairSet non_edges = universe.minus(net.layer(target).edge_set());

  std::vector<EvaluationResult> results(methods.size());
  for (std::size_t i = 0; i < methods.size(); ++i) {
    results[i].method = methods[i];
  }

  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    const Split split = split_edges(net, target, spec, trial);
    const PairSet candidates = universe.minus(split.training);
    const MultiplexNetwork training_view = net.with_layer_edges(target, split.training);
    const std::uint64_t split_seed = derive_seed(spec.seed, trial);

    for (std::size_t i = 0; i < methods.size(); ++i) {
      const Method method = methods[i];
      RankedPrediction ranking;
      if (method == Method::NLFLP) {
        ranking = allocate_scores(net, config, split.training, candidates);
        results[i].single_layer_warning |= ranking.single_layer;
      } else {
        ranking = ranked_from_scores(
            score_all_pairs(training_view, target, baseline_index(method), candidates));
      }
      const PairScoreMap score_map(ranking);
      const AucResult auc = auc_sampled(score_map, split.test, non_edges,
                                        auc_comparisons,
                                        derive_seed(spec.seed, auc_stream(trial, method)));
      TrialRecord record;
      record.trial = trial;
      record.split_seed = split_seed;
      record.training_size = split.training.size();
      record.test_size = split.test.size();
      record.alpha = auc.alpha;
      record.beta = auc.beta;
      record.gamma = auc.gamma;
      record.auc = auc.auc;
      record.precision = precision_at(ranking, split.test, split.test.size());
      results[i].per_trial.push_back(record);
    }
  }

  for (EvaluationResult& r : results) aggregate(r);
  return results;
}

}  // namespace nlflp
