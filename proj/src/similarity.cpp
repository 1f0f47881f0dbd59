#include "nlflp/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlflp {
namespace {

void require_distinct(NodeId u, NodeId v) {
  if (u == v) {
    throw std::invalid_argument("similarity is undefined for a node with itself");
  }
}

std::size_t count_common(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

std::string similarity_name(SimilarityIndex index) {
  switch (index) {
    case SimilarityIndex::CN: return "cn";
    case SimilarityIndex::JC: return "jc";
    case SimilarityIndex::AA: return "aa";
    case SimilarityIndex::LHN: return "lhn";
    case SimilarityIndex::HDI: return "hdi";
  }
  throw std::invalid_argument("unknown similarity index");
}

std::optional<SimilarityIndex> parse_similarity(const std::string& name) {
  if (name == "cn") return SimilarityIndex::CN;
  if (name == "jc") return SimilarityIndex::JC;
  if (name == "aa") return SimilarityIndex::AA;
  if (name == "lhn") return SimilarityIndex::LHN;
  if (name == "hdi") return SimilarityIndex::HDI;
  return std::nullopt;
}

double common_neighbors(const MultiplexNetwork& net, int layer, NodeId u, NodeId v) {
  require_distinct(u, v);
  const LayerGraph& g = net.layer(layer);
  return static_cast<double>(count_common(g.neighbors(u), g.neighbors(v)));
}

double jaccard(const MultiplexNetwork& net, int layer, NodeId u, NodeId v) {
  require_distinct(u, v);
  const LayerGraph& g = net.layer(layer);
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::size_t common = count_common(nu, nv);
  std::size_t uni = nu.size() + nv.size() - common;
  if (uni == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(uni);
}

double adamic_adar(const MultiplexNetwork& net, int layer, NodeId u, NodeId v) {
  require_distinct(u, v);
  const LayerGraph& g = net.layer(layer);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      // A shared neighbor touches both u and v, so its degree is at least 2.
      sum += 1.0 / std::log(static_cast<double>(g.degree(a[i])));
      ++i;
      ++j;
    }
  }
  return sum;
}

double leicht_holme_newman(const MultiplexNetwork& net, int layer, NodeId u, NodeId v) {
  require_distinct(u, v);
  const LayerGraph& g = net.layer(layer);
  std::size_t ku = g.degree(u);
  std::size_t kv = g.degree(v);
  if (ku == 0 || kv == 0) return 0.0;
  std::size_t common = count_common(g.neighbors(u), g.neighbors(v));
  return static_cast<double>(common) / static_cast<double>(ku * kv);
}

double hub_depressed(const MultiplexNetwork& net, int layer, NodeId u, NodeId v) {
  require_distinct(u, v);
  const LayerGraph& g = net.layer(layer);
  std::size_t ku = g.degree(u);
  std::size_t kv = g.degree(v);
  std::size_t hi = std::max(ku, kv);
  if (hi == 0) return 0.0;
  std::size_t common = count_common(g.neighbors(u), g.neighbors(v));
  return static_cast<double>(common) / static_cast<double>(hi);
}

double similarity_score(const MultiplexNetwork& net, int layer,
                        SimilarityIndex index, NodeId u, NodeId v) {
  switch (index) {
    case SimilarityIndex::CN: return common_neighbors(net, layer, u, v);
    case SimilarityIndex::JC: return jaccard(net, layer, u, v);
    case SimilarityIndex::AA: return adamic_adar(net, layer, u, v);
    case SimilarityIndex::LHN: return leicht_holme_newman(net, layer, u, v);
    case SimilarityIndex::HDI: return hub_depressed(net, layer, u, v);
  }
  throw std::invalid_argument("unknown similarity index");
}

ScoreTable::ScoreTable(SimilarityIndex index, int layer,
                       std::vector<Pair> pairs, std::vector<double> values)
    : index_(index), layer_(layer), pairs_(std::move(pairs)), values_(std::move(values)) {
  if (pairs_.size() != values_.size()) {
    throw std::invalid_argument("score table pairs and values must align");
  }
  if (!std::is_sorted(pairs_.begin(), pairs_.end())) {
    throw std::invalid_argument("score table pairs must be sorted");
  }
}

std::optional<double> ScoreTable::get(Pair p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return values_[static_cast<std::size_t>(it - pairs_.begin())];
}

ScoreTable score_all_pairs(const MultiplexNetwork& net, int layer,
                           SimilarityIndex index, const PairSet& candidates) {
  std::vector<Pair> pairs(candidates.pairs());
  std::vector<double> values;
  values.reserve(pairs.size());
  for (const Pair& p : pairs) {
    values.push_back(similarity_score(net, layer, index, p.a, p.b));
  }
  return ScoreTable(index, layer, std::move(pairs), std::move(values));
}

}  // namespace nlflp
