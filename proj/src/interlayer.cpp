#include "nlflp/interlayer.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace nlflp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shortest-path counts from one source over unweighted edges.
struct BfsCounts {
  std::vector<std::int64_t> dist;   // -1 = unreachable
  std::vector<double> sigma;        // number of shortest paths
};

BfsCounts bfs_counts(const LayerGraph& g, std::size_t n, NodeId source) {
  BfsCounts r;
  r.dist.assign(n, -1);
  r.sigma.assign(n, 0.0);
  r.dist[source] = 0;
  r.sigma[source] = 1.0;
  std::queue<NodeId> q;
  q.push(source);
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : g.neighbors(u)) {
      if (r.dist[v] < 0) {
        r.dist[v] = r.dist[u] + 1;
        q.push(v);
      }
      if (r.dist[v] == r.dist[u] + 1) {
        r.sigma[v] += r.sigma[u];
      }
    }
  }
  return r;
}

}  // namespace

CentralityVector betweenness_centrality(const MultiplexNetwork& net, int layer) {
  const LayerGraph& g = net.layer(layer);
  const std::size_t n = net.node_count();
  CentralityVector cv;
  cv.layer = layer;
  cv.values.assign(n, 0.0);
  if (n < 3) return cv;  // degenerate normalizer

  std::vector<BfsCounts> from(n);
  for (NodeId s = 0; s < n; ++s) {
    from[s] = bfs_counts(g, n, s);
  }

  // Accumulate sigma_sv * sigma_vt / sigma_st per unordered pair (s,t) in
  // ascending order; this fixed order makes the floating-point sums
  // reproducible across runs.
  for (NodeId s = 0; s + 1 < n; ++s) {
    const BfsCounts& fs = from[s];
    for (NodeId t = s + 1; t < n; ++t) {
      if (fs.dist[t] < 0) continue;  // disconnected pair contributes nothing
      const BfsCounts& ft = from[t];
      const double sigma_st = fs.sigma[t];
      const std::int64_t d_st = fs.dist[t];
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (fs.dist[v] < 0 || ft.dist[v] < 0) continue;
        if (fs.dist[v] + ft.dist[v] != d_st) continue;
        cv.values[v] += fs.sigma[v] * ft.sigma[v] / sigma_st;
      }
    }
  }

  const double norm =
      static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (double& x : cv.values) x /= norm;
  return cv;
}

double centrality_distance(const CentralityVector& cv1,
                           const CentralityVector& cv2, NodeId i) {
  if (cv1.values.size() != cv2.values.size()) {
    throw std::invalid_argument("centrality vectors have different lengths");
  }
  if (i >= cv1.values.size()) {
    throw std::out_of_range("node id " + std::to_string(i) + " out of range");
  }
  return std::abs(cv1.values[i] - cv2.values[i]);
}

double node_layer_similarity(const CentralityVector& cv1,
                             const CentralityVector& cv2, NodeId i) {
  return 1.0 - centrality_distance(cv1, cv2, i);
}

double layer_similarity_centrality(const MultiplexNetwork& net, int l1, int l2) {
  CentralityVector cv1 = betweenness_centrality(net, l1);
  CentralityVector cv2 = betweenness_centrality(net, l2);
  double sum = 0.0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    sum += node_layer_similarity(cv1, cv2, i);
  }
  return sum / static_cast<double>(net.node_count());
}

double aasn_global(const MultiplexNetwork& net, int l1, int l2) {
  const LayerGraph& a = net.layer(l1);
  if (a.edge_count() == 0) {
    throw std::invalid_argument("layer has no edges");
  }
  const LayerGraph& b = net.layer(l2);
  // Degree sums are twice the edge counts, so the ratio reduces to
  // |E(l1) ∩ E(l2)| / |E(l1)|.
  std::size_t shared = a.edge_set().intersection_size(b.edge_set());
  return static_cast<double>(shared) / static_cast<double>(a.edge_count());
}

double aasn_local(const MultiplexNetwork& net, int l1, int l2, NodeId i, NodeId j) {
  LayerGraph inter = net.intersection_layer(l1, l2);
  const LayerGraph& a = net.layer(l1);
  std::size_t denom = a.degree(i) + a.degree(j);
  if (denom == 0) return 0.0;
  std::size_t numer = inter.degree(i) + inter.degree(j);
  return static_cast<double>(numer) / static_cast<double>(denom);
}

double layer_likelihood(const MultiplexNetwork& net, int target, int predictor,
                        const PairSet& training_edges) {
  if (target == predictor) {
    throw std::invalid_argument("predictor layer must differ from target layer");
  }
  const LayerGraph& pred = net.layer(predictor);
  net.layer(target);  // range check
  std::size_t shared = pred.edge_set().intersection_size(training_edges);
  return (static_cast<double>(shared) + 1.0) /
         (static_cast<double>(pred.edge_count()) + 2.0);
}

double predictor_support(const MultiplexNetwork& net, int target, int predictor,
                         const PairSet& training_edges) {
  if (target == predictor) {
    throw std::invalid_argument("predictor layer must differ from target layer");
  }
  const LayerGraph& pred = net.layer(predictor);
  net.layer(target);  // range check
  std::size_t shared = pred.edge_set().intersection_size(training_edges);
  return (static_cast<double>(shared) + 1.0) /
         (static_cast<double>(training_edges.size()) + 2.0);
}

double LayerSimilarityReport::s_cw_at(int l1, int l2) const {
  return s_cw[static_cast<std::size_t>(l1) * layer_count + static_cast<std::size_t>(l2)];
}

double LayerSimilarityReport::aasn_at(int l1, int l2) const {
  return aasn[static_cast<std::size_t>(l1) * layer_count + static_cast<std::size_t>(l2)];
}

double LayerSimilarityReport::likelihood_at(int target, int predictor) const {
  return likelihood[static_cast<std::size_t>(target) * layer_count +
                    static_cast<std::size_t>(predictor)];
}

LayerSimilarityReport compute_layer_report(const MultiplexNetwork& net) {
  LayerSimilarityReport report;
  const std::size_t m = net.layer_count();
  const std::size_t n = net.node_count();
  report.node_count = n;
  report.layer_count = m;
  report.edge_counts.resize(m);
  report.densities.resize(m);
  const double pair_total = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  for (std::size_t l = 0; l < m; ++l) {
    report.edge_counts[l] = net.layer(static_cast<int>(l)).edge_count();
    report.densities[l] =
        pair_total > 0.0 ? static_cast<double>(report.edge_counts[l]) / pair_total : 0.0;
  }

  std::vector<CentralityVector> centrality(m);
  for (std::size_t l = 0; l < m; ++l) {
    centrality[l] = betweenness_centrality(net, static_cast<int>(l));
  }

  report.s_cw.assign(m * m, 0.0);
  report.aasn.assign(m * m, kNaN);
  report.likelihood.assign(m * m, kNaN);
  for (std::size_t l1 = 0; l1 < m; ++l1) {
    for (std::size_t l2 = 0; l2 < m; ++l2) {
      double sum = 0.0;
      for (NodeId i = 0; i < n; ++i) {
        sum += node_layer_similarity(centrality[l1], centrality[l2], i);
      }
      report.s_cw[l1 * m + l2] = sum / static_cast<double>(n);
      if (report.edge_counts[l1] > 0) {
        report.aasn[l1 * m + l2] =
            aasn_global(net, static_cast<int>(l1), static_cast<int>(l2));
      }
      if (l1 != l2) {
        report.likelihood[l1 * m + l2] =
            layer_likelihood(net, static_cast<int>(l1), static_cast<int>(l2),
                             net.layer(static_cast<int>(l1)).edge_set());
      }
    }
  }
  return report;
}

}  // namespace nlflp
