#include "nlflp/multiplex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace nlflp {

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool PairSet::contains(Pair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

PairSet PairSet::minus(const PairSet& other) const {
  std::vector<Pair> out;
  out.reserve(pairs_.size());
  std::set_difference(pairs_.begin(), pairs_.end(),
                      other.pairs_.begin(), other.pairs_.end(),
                      std::back_inserter(out));
  PairSet r;
  r.pairs_ = std::move(out);  // already sorted and unique
  return r;
}

PairSet PairSet::intersect(const PairSet& other) const {
  std::vector<Pair> out;
  std::set_intersection(pairs_.begin(), pairs_.end(),
                        other.pairs_.begin(), other.pairs_.end(),
                        std::back_inserter(out));
  PairSet r;
  r.pairs_ = std::move(out);
  return r;
}

std::size_t PairSet::intersection_size(const PairSet& other) const {
  std::size_t n = 0;
  auto a = pairs_.begin();
  auto b = other.pairs_.begin();
  while (a != pairs_.end() && b != other.pairs_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

LayerGraph::LayerGraph(int layer_id, std::size_t node_count,
                       std::vector<Pair> edges, std::vector<double> weights)
    : layer_id_(layer_id) {
  // Edges arrive sorted and unique from MultiplexNetwork::build.
  edge_set_ = PairSet(std::move(edges));
  edge_weights_ = std::move(weights);
  adjacency_.resize(node_count);
  adjacency_weights_.resize(node_count);
  for (std::size_t i = 0; i < edge_set_.size(); ++i) {
    const Pair& e = edge_set_[i];
    adjacency_[e.a].push_back(e.b);
    adjacency_weights_[e.a].push_back(edge_weights_[i]);
    adjacency_[e.b].push_back(e.a);
    adjacency_weights_[e.b].push_back(edge_weights_[i]);
  }
  // Canonical edge order inserts neighbors of each node in ascending order
  // already for the .a side; the .b side may interleave, so sort both.
  for (std::size_t u = 0; u < node_count; ++u) {
    auto& nbr = adjacency_[u];
    auto& wts = adjacency_weights_[u];
    std::vector<std::size_t> order(nbr.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return nbr[i] < nbr[j]; });
    std::vector<NodeId> n2(nbr.size());
    std::vector<double> w2(wts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      n2[i] = nbr[order[i]];
      w2[i] = wts[order[i]];
    }
    nbr = std::move(n2);
    wts = std::move(w2);
  }
}

std::span<const NodeId> LayerGraph::neighbors(NodeId u) const {
  if (u >= adjacency_.size()) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range");
  }
  return adjacency_[u];
}

std::span<const double> LayerGraph::neighbor_weights(NodeId u) const {
  if (u >= adjacency_weights_.size()) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range");
  }
  return adjacency_weights_[u];
}

std::size_t LayerGraph::degree(NodeId u) const {
  return neighbors(u).size();
}

bool LayerGraph::has_edge(NodeId u, NodeId v) const {
  return edge_weight(u, v).has_value();
}

std::optional<double> LayerGraph::edge_weight(NodeId u, NodeId v) const {
  auto nbr = neighbors(u);
  if (v >= adjacency_.size()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }
  auto it = std::lower_bound(nbr.begin(), nbr.end(), v);
  if (it == nbr.end() || *it != v) return std::nullopt;
  return adjacency_weights_[u][static_cast<std::size_t>(it - nbr.begin())];
}

MultiplexNetwork MultiplexNetwork::build(std::size_t node_count,
                                         const std::vector<EdgeRecord>& edges,
                                         std::size_t layer_count) {
  std::size_t n_layers = layer_count;
  for (const EdgeRecord& e : edges) {
    if (e.layer < 0) {
      throw std::invalid_argument("negative layer id " + std::to_string(e.layer));
    }
    n_layers = std::max(n_layers, static_cast<std::size_t>(e.layer) + 1);
  }
  if (n_layers == 0) {
    throw std::invalid_argument("network needs at least one layer");
  }

  // Collapse duplicate records by summing weights.
  std::vector<std::map<Pair, double>> per_layer(n_layers);
  for (const EdgeRecord& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument(
          "node id out of range in edge (" + std::to_string(e.layer) + ", " +
          std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument(
          "self-loop in edge (" + std::to_string(e.layer) + ", " +
          std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    if (!(e.weight > 0.0)) {
      throw std::invalid_argument(
          "non-positive weight " + std::to_string(e.weight) + " in edge (" +
          std::to_string(e.layer) + ", " + std::to_string(e.u) + ", " +
          std::to_string(e.v) + ")");
    }
    per_layer[static_cast<std::size_t>(e.layer)][make_pair(e.u, e.v)] += e.weight;
  }

  MultiplexNetwork net;
  net.node_count_ = node_count;
  net.labels_.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    net.labels_[i] = static_cast<long long>(i);
  }
  net.layers_.reserve(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    std::vector<Pair> pairs;
    std::vector<double> weights;
    pairs.reserve(per_layer[l].size());
    weights.reserve(per_layer[l].size());
    for (const auto& [pair, w] : per_layer[l]) {
      pairs.push_back(pair);
      weights.push_back(w);
    }
    net.layers_.push_back(
        LayerGraph(static_cast<int>(l), node_count, std::move(pairs), std::move(weights)));
  }
  return net;
}

const LayerGraph& MultiplexNetwork::layer(int l) const {
  if (l < 0 || static_cast<std::size_t>(l) >= layers_.size()) {
    throw std::out_of_range("layer " + std::to_string(l) + " out of range");
  }
  return layers_[static_cast<std::size_t>(l)];
}

std::span<const NodeId> MultiplexNetwork::neighbors(int l, NodeId u) const {
  return layer(l).neighbors(u);
}

std::size_t MultiplexNetwork::degree(int l, NodeId u) const {
  return layer(l).degree(u);
}

std::optional<double> MultiplexNetwork::edge_weight(int l, NodeId u, NodeId v) const {
  return layer(l).edge_weight(u, v);
}

LayerGraph MultiplexNetwork::intersection_layer(int l1, int l2) const {
  const LayerGraph& a = layer(l1);
  const LayerGraph& b = layer(l2);
  std::vector<Pair> pairs;
  std::vector<double> weights;
  for (std::size_t i = 0; i < a.edge_set().size(); ++i) {
    const Pair& e = a.edge_set()[i];
    if (auto w = b.edge_weight(e.a, e.b)) {
      pairs.push_back(e);
      weights.push_back(std::min(a.weight_of_edge(i), *w));
    }
  }
  return LayerGraph(l1, node_count_, std::move(pairs), std::move(weights));
}

PairSet MultiplexNetwork::universal_pairs() const {
  if (node_count_ < 2) {
    throw std::invalid_argument("universal pair set needs at least 2 nodes");
  }
  std::vector<Pair> pairs;
  pairs.reserve(node_count_ * (node_count_ - 1) / 2);
  for (NodeId u = 0; u + 1 < node_count_; ++u) {
    for (NodeId v = u + 1; v < node_count_; ++v) {
      pairs.push_back(Pair{u, v});
    }
  }
  PairSet r;
  // Lexicographic generation is already sorted; construct directly.
  r = PairSet(std::move(pairs));
  return r;
}

MultiplexNetwork MultiplexNetwork::with_layer_edges(int l, const PairSet& keep) const {
  const LayerGraph& src = layer(l);
  MultiplexNetwork net(*this);
  std::vector<Pair> pairs;
  std::vector<double> weights;
  pairs.reserve(keep.size());
  weights.reserve(keep.size());
  for (std::size_t i = 0; i < src.edge_set().size(); ++i) {
    const Pair& e = src.edge_set()[i];
    if (keep.contains(e)) {
      pairs.push_back(e);
      weights.push_back(src.weight_of_edge(i));
    }
  }
  net.layers_[static_cast<std::size_t>(l)] =
      LayerGraph(l, node_count_, std::move(pairs), std::move(weights));
  return net;
}

MultiplexNetwork MultiplexNetwork::with_scaled_weights(int l, double c) const {
  if (!(c > 0.0)) {
    throw std::invalid_argument("weight scale must be positive");
  }
  const LayerGraph& src = layer(l);
  MultiplexNetwork net(*this);
  std::vector<Pair> pairs(src.edge_set().pairs());
  std::vector<double> weights(src.edge_set().size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = src.weight_of_edge(i) * c;
  }
  net.layers_[static_cast<std::size_t>(l)] =
      LayerGraph(l, node_count_, std::move(pairs), std::move(weights));
  return net;
}

long long MultiplexNetwork::label_of(NodeId u) const {
  if (u >= node_count_) {
    throw std::out_of_range("node id " + std::to_string(u) + " out of range");
  }
  return labels_[u];
}

void MultiplexNetwork::set_labels(std::vector<long long> labels) {
  if (labels.size() != node_count_) {
    throw std::invalid_argument("label map size must equal node count");
  }
  labels_ = std::move(labels);
}

void MultiplexNetwork::set_layer_names(std::vector<std::string> names) {
  if (names.size() != layers_.size()) {
    throw std::invalid_argument("layer name count must equal layer count");
  }
  layer_names_ = std::move(names);
}

}  // namespace nlflp
