#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlflp/multiplex.hpp"

namespace nlflp {

// Structural similarity indices on a single layer. All indices use the
// unweighted topology of the layer; edge weights never enter the score.
enum class SimilarityIndex { CN, JC, AA, LHN, HDI };

std::string similarity_name(SimilarityIndex index);
std::optional<SimilarityIndex> parse_similarity(const std::string& name);

// Number of shared neighbors of u and v. Throws std::invalid_argument
// when u == v; a node is never a candidate endpoint with itself.
double common_neighbors(const MultiplexNetwork& net, int layer, NodeId u, NodeId v);

// common / |union of neighborhoods|; 0 when both neighborhoods are empty.
double jaccard(const MultiplexNetwork& net, int layer, NodeId u, NodeId v);

// Sum over shared neighbors z of 1 / ln(degree(z)). Any shared neighbor
// has degree >= 2, so the logarithm is always positive.
double adamic_adar(const MultiplexNetwork& net, int layer, NodeId u, NodeId v);

// common / (degree(u) * degree(v)); 0 when either endpoint is isolated.
double leicht_holme_newman(const MultiplexNetwork& net, int layer, NodeId u, NodeId v);

// common / max(degree(u), degree(v)); 0 when both endpoints are isolated.
double hub_depressed(const MultiplexNetwork& net, int layer, NodeId u, NodeId v);

double similarity_score(const MultiplexNetwork& net, int layer,
                        SimilarityIndex index, NodeId u, NodeId v);

// Scores for a fixed candidate pair list, stored sorted by pair for
// logarithmic lookup. Pairs absent from the table score 0.
class ScoreTable {
 public:
  ScoreTable(SimilarityIndex index, int layer,
             std::vector<Pair> pairs, std::vector<double> values);

  SimilarityIndex index() const { return index_; }
  int layer() const { return layer_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<double>& values() const { return values_; }

  std::optional<double> get(Pair p) const;
  double at_or_zero(Pair p) const { return get(p).value_or(0.0); }
  double at_or_zero(NodeId u, NodeId v) const { return at_or_zero(make_pair(u, v)); }

 private:
  SimilarityIndex index_;
  int layer_;
  std::vector<Pair> pairs_;
  std::vector<double> values_;
};

ScoreTable score_all_pairs(const MultiplexNetwork& net, int layer,
                           SimilarityIndex index, const PairSet& candidates);

}  // namespace nlflp
