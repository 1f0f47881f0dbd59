#include "nlflp/predictor.hpp"

#include <algorithm>
#include <stdexcept>

#include "nlflp/interlayer.hpp"

namespace nlflp {
namespace {

// One endpoint's contribution to a pair weight: the best-scoring incident
// neighbor's similarity and (behavior-adjusted) edge weight.
struct Side {
  bool present = false;
  double score = 0.0;   // similarity between the endpoint and its best neighbor
  double weight = 0.0;  // edge weight to that neighbor, times behavior multiplier
};

double pair_weight_core(double s_xy, double rho_value, const Side& a, const Side& b) {
  if (!a.present && !b.present) return 0.0;
  double numer = 0.0;
  double sides = 0.0;
  if (a.present) {
    double term = a.score > 0.0 ? 1.0 + rho_value * s_xy / a.score : 1.0;
    numer += term * a.weight;
    sides += 1.0;
  }
  if (b.present) {
    double term = b.score > 0.0 ? 1.0 + rho_value * s_xy / b.score : 1.0;
    numer += term * b.weight;
    sides += 1.0;
  }
  return numer / sides;
}

std::optional<NodeId> best_neighbor(const LayerGraph& g, const ScoreTable& scores,
                                    NodeId endpoint, NodeId excluded) {
  std::optional<NodeId> best;
  double best_score = 0.0;
  for (NodeId z : g.neighbors(endpoint)) {
    if (z == excluded) continue;
    double s = scores.at_or_zero(z, endpoint);
    if (!best || s > best_score) {
      best = z;
      best_score = s;
    }
  }
  return best;
}

void sort_entries(std::vector<ScoredPair>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ScoredPair& lhs, const ScoredPair& rhs) {
              if (lhs.score != rhs.score) return lhs.score > rhs.score;
              return lhs.pair < rhs.pair;
            });
}

}  // namespace

double rho(const MultiplexNetwork& net, int target, int predictor, bool damping) {
  const LayerGraph& pred = net.layer(predictor);
  if (pred.edge_count() == 0) {
    throw std::invalid_argument("predictor layer has no edges");
  }
  double ratio = static_cast<double>(net.layer(target).edge_count()) /
                 static_cast<double>(pred.edge_count());
  if (damping && ratio > 1.0) return ratio / 2.0;
  return ratio;
}

TopNeighbors top_neighbors(const MultiplexNetwork& net, int layer,
                           const ScoreTable& scores, NodeId x, NodeId y) {
  if (x == y) {
    throw std::invalid_argument("endpoints of a candidate pair must differ");
  }
  const LayerGraph& g = net.layer(layer);
  TopNeighbors result;
  result.a = best_neighbor(g, scores, x, y);
  result.b = best_neighbor(g, scores, y, x);
  return result;
}

double pair_weight(const MultiplexNetwork& net, int layer,
                   const ScoreTable& scores, NodeId x, NodeId y,
                   double rho_value, double behavior_weight) {
  TopNeighbors top = top_neighbors(net, layer, scores, x, y);
  const LayerGraph& g = net.layer(layer);
  Side a, b;
  if (top.a) {
    a.present = true;
    a.score = scores.at_or_zero(*top.a, x);
    a.weight = *g.edge_weight(*top.a, x) * behavior_weight;
  }
  if (top.b) {
    b.present = true;
    b.score = scores.at_or_zero(*top.b, y);
    b.weight = *g.edge_weight(*top.b, y) * behavior_weight;
  }
  return pair_weight_core(scores.at_or_zero(x, y), rho_value, a, b);
}

RankedPrediction allocate_scores(const MultiplexNetwork& net,
                                 const PredictionConfig& config,
                                 const PairSet& training_edges,
                                 const PairSet& candidates) {
  const int target = config.target_layer;
  net.layer(target);  // range check
  std::vector<double> behavior = config.behavior_weights;
  if (behavior.empty()) {
    behavior.assign(net.layer_count(), 1.0);
  }
  if (behavior.size() != net.layer_count()) {
    throw std::invalid_argument("behavior weights must cover every layer");
  }
  for (double w : behavior) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("behavior weights must be positive");
    }
  }
  if (training_edges.intersection_size(candidates) != 0) {
    throw std::invalid_argument("candidates must not contain training edges");
  }

  const MultiplexNetwork view = net.with_layer_edges(target, training_edges);
  const LayerGraph& g = view.layer(target);
  const std::size_t n = view.node_count();
  const double target_behavior = behavior[static_cast<std::size_t>(target)];

  // Mean damped edge-count ratio over predictor layers that have edges;
  // with no usable predictor the ratio is neutral.
  double rho_value = 1.0;
  {
    double sum = 0.0;
    std::size_t used = 0;
    for (int l = 0; l < static_cast<int>(view.layer_count()); ++l) {
      if (l == target || view.layer(l).edge_count() == 0) continue;
      sum += rho(view, target, l, config.rho_damping);
      ++used;
    }
    if (used > 0) rho_value = sum / static_cast<double>(used);
  }

  // Best and runner-up neighbor of every node by base-method score, so each
  // candidate pair resolves its top neighbor (with one exclusion) in O(1).
  struct Ranked {
    bool has = false;
    NodeId z = 0;
    double score = 0.0;
    double weight = 0.0;
  };
  std::vector<Ranked> best(n), runner_up(n);
  for (NodeId x = 0; x < n; ++x) {
    auto nbr = g.neighbors(x);
    auto wts = g.neighbor_weights(x);
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      NodeId z = nbr[i];
      double s = similarity_score(view, target, config.base_method, z, x);
      Ranked r{true, z, s, wts[i]};
      if (!best[x].has || s > best[x].score) {
        runner_up[x] = best[x];
        best[x] = r;
      } else if (!runner_up[x].has || s > runner_up[x].score) {
        runner_up[x] = r;
      }
    }
  }
  auto side_for = [&](NodeId endpoint, NodeId excluded) {
    const Ranked& pick =
        best[endpoint].has && best[endpoint].z != excluded ? best[endpoint]
                                                           : runner_up[endpoint];
    Side side;
    if (pick.has && pick.z != excluded) {
      side.present = true;
      side.score = pick.score;
      side.weight = pick.weight * target_behavior;
    }
    return side;
  };

  RankedPrediction result;
  result.target_layer = target;
  result.method = "nlflp";
  result.single_layer = view.layer_count() == 1;
  result.entries.reserve(candidates.size());
  for (const Pair& p : candidates) {
    double s_xy = similarity_score(view, target, config.base_method, p.a, p.b);
    double score =
        pair_weight_core(s_xy, rho_value, side_for(p.a, p.b), side_for(p.b, p.a));
    result.entries.push_back(ScoredPair{p, score});
  }

  if (!result.single_layer) {
    for (int l = 0; l < static_cast<int>(view.layer_count()); ++l) {
      if (l == target) continue;
      const LayerGraph& pred = view.layer(l);
      double support = predictor_support(view, target, l, training_edges);
      for (ScoredPair& e : result.entries) {
        e.score *= pred.has_edge(e.pair.a, e.pair.b) ? support : 1.0 - support;
      }
    }
  }

  sort_entries(result.entries);
  return result;
}

RankedPrediction ranked_from_scores(const ScoreTable& scores) {
  RankedPrediction result;
  result.target_layer = scores.layer();
  result.method = similarity_name(scores.index());
  result.entries.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    result.entries.push_back(ScoredPair{scores.pairs()[i], scores.values()[i]});
  }
  sort_entries(result.entries);
  return result;
}

}  // namespace nlflp
