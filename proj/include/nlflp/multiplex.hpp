#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nlflp {

using NodeId = std::uint32_t;

/// Unordered node pair, stored canonically as (a, b) with a < b.
struct Pair {
  NodeId a = 0;
  NodeId b = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

inline Pair make_pair(NodeId u, NodeId v) {
  return u < v ? Pair{u, v} : Pair{v, u};
}

/// Immutable sorted set of unordered node pairs (no self-pairs, no duplicates).
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<Pair> pairs);

  bool contains(Pair p) const;
  bool contains(NodeId u, NodeId v) const { return contains(make_pair(u, v)); }

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// Pairs in this set but not in `other`.
  PairSet minus(const PairSet& other) const;
  /// Pairs present in both sets.
  PairSet intersect(const PairSet& other) const;
  /// Number of pairs present in both sets (no allocation).
  std::size_t intersection_size(const PairSet& other) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// One edge of a multiplex input, prior to network construction.
struct EdgeRecord {
  int layer = 0;
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

/// Single layer of a multiplex network: undirected, positively weighted,
/// no self-loops. Neighbor lists are sorted; edge list is sorted canonically.
class LayerGraph {
 public:
  int layer_id() const { return layer_id_; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_set_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const;
  /// Weights aligned with neighbors(u).
  std::span<const double> neighbor_weights(NodeId u) const;
  std::size_t degree(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;
  std::optional<double> edge_weight(NodeId u, NodeId v) const;

  /// All edges as a pair set; weight_of_edge(i) is aligned with edge_set()[i].
  const PairSet& edge_set() const { return edge_set_; }
  double weight_of_edge(std::size_t i) const { return edge_weights_[i]; }

 private:
  friend class MultiplexNetwork;
  LayerGraph() = default;
  LayerGraph(int layer_id, std::size_t node_count,
             std::vector<Pair> edges, std::vector<double> weights);

  int layer_id_ = 0;
  PairSet edge_set_;
  std::vector<double> edge_weights_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<double>> adjacency_weights_;
};

/// Immutable multiplex network: one shared node universe 0..N-1 and an
/// ordered sequence of weighted undirected layers. All queries are
/// read-only and safe for concurrent use once constructed.
class MultiplexNetwork {
 public:
  /// Builds a network from raw edge records. Duplicate (layer,u,v) records
  /// collapse by summing their weights. Layer count is inferred as
  /// max layer id + 1 unless `layer_count` forces a larger value (layers
  /// without records stay empty).
  ///
  /// Throws std::invalid_argument on self-loops, non-positive weights,
  /// negative layer ids, or node ids >= node_count.
  static MultiplexNetwork build(std::size_t node_count,
                                const std::vector<EdgeRecord>& edges,
                                std::size_t layer_count = 0);

  std::size_t node_count() const { return node_count_; }
  std::size_t layer_count() const { return layers_.size(); }
  const LayerGraph& layer(int l) const;

  std::span<const NodeId> neighbors(int layer, NodeId u) const;
  std::size_t degree(int layer, NodeId u) const;
  std::optional<double> edge_weight(int layer, NodeId u, NodeId v) const;

  /// Layer holding exactly the edges present in both l1 and l2; each kept
  /// edge carries the smaller of the two weights.
  LayerGraph intersection_layer(int l1, int l2) const;

  /// All N(N-1)/2 unordered pairs. Throws if node_count < 2.
  PairSet universal_pairs() const;

  /// Copy of this network where `layer` keeps only the edges in `keep`
  /// (weights preserved). Other layers are untouched.
  MultiplexNetwork with_layer_edges(int layer, const PairSet& keep) const;

  /// Copy with every edge weight of `layer` multiplied by c > 0.
  MultiplexNetwork with_scaled_weights(int layer, double c) const;

  /// External label of a node (identity unless set at load time).
  long long label_of(NodeId u) const;
  const std::vector<long long>& labels() const { return labels_; }
  void set_labels(std::vector<long long> labels);

  const std::vector<std::string>& layer_names() const { return layer_names_; }
  void set_layer_names(std::vector<std::string> names);

 private:
  MultiplexNetwork() = default;

  std::size_t node_count_ = 0;
  std::vector<LayerGraph> layers_;
  std::vector<long long> labels_;
  std::vector<std::string> layer_names_;
};

}  // namespace nlflp
