#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlflp/multiplex.hpp"
#include "nlflp/similarity.hpp"

namespace nlflp {

struct PredictionConfig {
  int target_layer = 0;
  SimilarityIndex base_method = SimilarityIndex::CN;
  // Damps the edge-count ratio by half when the target layer has more
  // edges than the predictor layer.
  bool rho_damping = true;
  // Per-layer multiplier applied to edge weights when they enter a pair
  // weight. Empty means 1.0 everywhere; otherwise must match the layer
  // count and be positive.
  std::vector<double> behavior_weights;
};

struct ScoredPair {
  Pair pair;
  double score = 0.0;
};

// Candidate pairs ranked by final score, descending; equal scores order
// by pair (min id, then max id). Every entry is a non-edge of the target
// layer's training graph.
struct RankedPrediction {
  int target_layer = 0;
  std::string method;
  bool single_layer = false;  // set when no predictor layers were available
  std::vector<ScoredPair> entries;
};

// Edge-count ratio |E_target| / |E_predictor|. With damping on, ratios
// above 1 are halved so a dominant target layer does not overwhelm the
// pair-weight terms. Throws std::invalid_argument when the predictor
// layer has no edges.
double rho(const MultiplexNetwork& net, int target, int predictor, bool damping);

struct TopNeighbors {
  std::optional<NodeId> a;  // best-scoring neighbor of x, excluding y
  std::optional<NodeId> b;  // best-scoring neighbor of y, excluding x
};

// Highest-scoring neighbors of each endpoint, judged by scores(z, endpoint).
// Pairs missing from the table score 0; ties go to the smaller node id;
// an endpoint with no eligible neighbor yields an absent entry.
TopNeighbors top_neighbors(const MultiplexNetwork& net, int layer,
                           const ScoreTable& scores, NodeId x, NodeId y);

// Weighted score for candidate pair (x,y) on one layer:
//   W_T1 = 1 + rho * S_XY / S_AX,  W_T2 = 1 + rho * S_XY / S_BY
//   W_XY = (W_T1 * W_AX + W_T2 * W_BY) / 2
// where A, B come from top_neighbors and W_AX, W_BY are the incident edge
// weights times the behavior multiplier. A zero S_AX or S_BY reduces its
// W_T term to 1; an absent A or B drops its summand and the divisor
// shrinks to 1; with both absent the weight is 0.
double pair_weight(const MultiplexNetwork& net, int layer,
                   const ScoreTable& scores, NodeId x, NodeId y,
                   double rho_value, double behavior_weight = 1.0);

// Full cross-layer allocation: each candidate starts from its pair weight
// on the target layer's training graph, then is multiplied, per predictor
// layer, by that layer's support estimate when the candidate is present
// there and by its complement when absent. Candidates must be disjoint
// from the training edges. A single-layer network skips the multiplication
// stage and flags the result.
RankedPrediction allocate_scores(const MultiplexNetwork& net,
                                 const PredictionConfig& config,
                                 const PairSet& training_edges,
                                 const PairSet& candidates);

// Ranking induced by a plain similarity table (score desc, pair asc).
RankedPrediction ranked_from_scores(const ScoreTable& scores);

}  // namespace nlflp
