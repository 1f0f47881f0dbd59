#pragma once

#include <vector>

#include "nlflp/multiplex.hpp"

namespace nlflp {

// Per-node normalized betweenness, in [0,1], for one layer.
struct CentralityVector {
  int layer = 0;
  std::vector<double> values;
};

// Exact betweenness from unweighted shortest-path counts, normalized by
// (N-1)(N-2)/2 so every value lies in [0,1]. Networks with fewer than
// 3 nodes have a degenerate normalizer and return all zeros. Pair
// contributions accumulate in a fixed (source asc, sink asc) order so
// results are reproducible bit for bit.
CentralityVector betweenness_centrality(const MultiplexNetwork& net, int layer);

// |cv1[i] - cv2[i]|. Throws std::invalid_argument on length mismatch.
double centrality_distance(const CentralityVector& cv1,
                           const CentralityVector& cv2, NodeId i);

// 1 - centrality_distance.
double node_layer_similarity(const CentralityVector& cv1,
                             const CentralityVector& cv2, NodeId i);

// Mean of node_layer_similarity over all N nodes.
double layer_similarity_centrality(const MultiplexNetwork& net, int l1, int l2);

// Edge-overlap similarity: sum of intersection-layer degrees over sum of
// l1 degrees, i.e. |E(l1) ∩ E(l2)| / |E(l1)|. Throws std::invalid_argument
// when l1 has no edges.
double aasn_global(const MultiplexNetwork& net, int l1, int l2);

// Per-pair overlap ratio (K(i)+K(j) in the intersection over the same sum
// in l1). A zero denominator is a degenerate pair and yields 0.
double aasn_local(const MultiplexNetwork& net, int l1, int l2, NodeId i, NodeId j);

// Smoothed frequency of predictor-layer edges inside the observed portion
// of the target layer: (|E_pred ∩ training| + 1) / (|E_pred| + 2).
// An empty predictor layer gives the uninformative prior 0.5.
double layer_likelihood(const MultiplexNetwork& net, int target, int predictor,
                        const PairSet& training_edges);

// Smoothed frequency of observed target edges that also appear in the
// predictor layer: (|E_pred ∩ training| + 1) / (|training| + 2). This is
// the direction used when allocating prediction scores: it estimates how
// strongly membership in the predictor layer supports membership in the
// target layer, independent of the predictor's own density.
double predictor_support(const MultiplexNetwork& net, int target, int predictor,
                         const PairSet& training_edges);

// Pairwise interlayer measures for every layer pair. Entries that are
// undefined for a given pair (empty denominator layers, the likelihood
// diagonal) are stored as NaN.
struct LayerSimilarityReport {
  std::size_t node_count = 0;
  std::size_t layer_count = 0;
  std::vector<std::size_t> edge_counts;   // per layer
  std::vector<double> densities;          // per layer, edges / (N(N-1)/2)
  std::vector<double> s_cw;               // row-major layer_count x layer_count
  std::vector<double> aasn;               // row-major, NaN when row layer empty
  std::vector<double> likelihood;         // row = target, col = predictor, NaN on diagonal

  double s_cw_at(int l1, int l2) const;
  double aasn_at(int l1, int l2) const;
  double likelihood_at(int target, int predictor) const;
};

LayerSimilarityReport compute_layer_report(const MultiplexNetwork& net);

}  // namespace nlflp
