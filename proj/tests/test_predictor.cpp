#include "doctest.h"

#include <stdexcept>

#include "nlflp/interlayer.hpp"
#include "nlflp/predictor.hpp"
#include "oracles.hpp"

using namespace nlflp;

namespace {

// Candidate (0,1) has common neighbors {2,3}; node 4 is 0's best-scoring
// neighbor (4 shared neighbors) and node 7 is 1's (2 shared neighbors, and
// the 1-7 edge carries weight 2). Built so the pair weight works out to
// (1.5*1.0 + 2.0*2.0)/2 = 2.75 at rho 1.
MultiplexNetwork worked_example() {
  return MultiplexNetwork::build(8, {{0, 0, 2, 1.0},
                                     {0, 0, 3, 1.0},
                                     {0, 0, 4, 1.0},
                                     {0, 0, 5, 1.0},
                                     {0, 0, 6, 1.0},
                                     {0, 1, 2, 1.0},
                                     {0, 1, 3, 1.0},
                                     {0, 1, 7, 2.0},
                                     {0, 4, 2, 1.0},
                                     {0, 4, 3, 1.0},
                                     {0, 4, 5, 1.0},
                                     {0, 4, 6, 1.0},
                                     {0, 7, 2, 1.0},
                                     {0, 7, 3, 1.0}});
}

ScoreTable full_cn_table(const MultiplexNetwork& net, int layer) {
  return score_all_pairs(net, layer, SimilarityIndex::CN, net.universal_pairs());
}

}  // namespace

TEST_CASE("edge count ratio") {
  std::vector<EdgeRecord> edges;
  for (NodeId u = 0; u < 100; ++u) {
    edges.push_back({0, u, static_cast<NodeId>(u + 101), 1.0});
  }
  for (NodeId u = 0; u < 200; ++u) {
    edges.push_back({1, u, static_cast<NodeId>(u + 201), 1.0});
  }
  auto net = MultiplexNetwork::build(401, edges);
  CHECK(rho(net, 0, 1, true) == 0.5);
  CHECK(rho(net, 0, 1, false) == 0.5);
  CHECK(rho(net, 1, 0, true) == 1.0);   // 2.0 halved
  CHECK(rho(net, 1, 0, false) == 2.0);  // damping off
  CHECK(rho(net, 0, 0, true) == 1.0);   // equal counts

  auto empty_pred = MultiplexNetwork::build(3, {{0, 0, 1, 1.0}}, 2);
  CHECK_THROWS_AS(rho(empty_pred, 0, 1, true), std::invalid_argument);
}

TEST_CASE("top neighbors") {
  auto net = worked_example();
  ScoreTable scores = full_cn_table(net, 0);

  TopNeighbors top = top_neighbors(net, 0, scores, 0, 1);
  REQUIRE(top.a.has_value());
  REQUIRE(top.b.has_value());
  CHECK(*top.a == 4);
  CHECK(*top.b == 7);

  // singleton candidate set
  auto chain = MultiplexNetwork::build(3, {{0, 0, 1, 1.0}, {0, 1, 2, 1.0}});
  ScoreTable chain_scores = full_cn_table(chain, 0);
  TopNeighbors t2 = top_neighbors(chain, 0, chain_scores, 1, 2);
  REQUIRE(t2.a.has_value());
  CHECK(*t2.a == 0);

  // isolated endpoint
  auto iso = MultiplexNetwork::build(3, {{0, 0, 1, 1.0}});
  ScoreTable iso_scores = full_cn_table(iso, 0);
  TopNeighbors t3 = top_neighbors(iso, 0, iso_scores, 2, 0);
  CHECK_FALSE(t3.a.has_value());
  REQUIRE(t3.b.has_value());

  CHECK_THROWS_AS(top_neighbors(net, 0, scores, 3, 3), std::invalid_argument);
}

TEST_CASE("top neighbor ties go to the smaller node id") {
  // Node 0's neighbors 3, 4, 5, 7 each share exactly one neighbor with it
  // (the two triangles 0-3-4 and 0-5-7), so all four tie.
  auto net = MultiplexNetwork::build(8, {{0, 0, 3, 1.0},
                                         {0, 0, 4, 1.0},
                                         {0, 0, 5, 1.0},
                                         {0, 0, 7, 1.0},
                                         {0, 3, 4, 1.0},
                                         {0, 5, 7, 1.0}});
  ScoreTable scores = full_cn_table(net, 0);
  for (NodeId z : {3u, 4u, 5u, 7u}) {
    CHECK(scores.at_or_zero(z, 0) == 1.0);
  }
  TopNeighbors top = top_neighbors(net, 0, scores, 0, 1);
  REQUIRE(top.a.has_value());
  CHECK(*top.a == 3);
}

TEST_CASE("pair weight matches the worked example exactly") {
  auto net = worked_example();
  ScoreTable scores = full_cn_table(net, 0);
  CHECK(scores.at_or_zero(0, 1) == 2.0);
  CHECK(scores.at_or_zero(4, 0) == 4.0);
  CHECK(scores.at_or_zero(7, 1) == 2.0);
  CHECK(pair_weight(net, 0, scores, 0, 1, 1.0) == 2.75);
}

TEST_CASE("pair weight degenerate conventions") {
  // both endpoints isolated -> 0
  auto iso = MultiplexNetwork::build(4, {{0, 0, 1, 1.0}});
  ScoreTable iso_scores = full_cn_table(iso, 0);
  CHECK(pair_weight(iso, 0, iso_scores, 2, 3, 1.0) == 0.0);

  // only one side present: divisor drops to 1
  double one_side = pair_weight(iso, 0, iso_scores, 0, 2, 1.0);
  CHECK(one_side == 1.0);  // W_T1 = 1 (S_XY = 0), edge weight 1.0

  // zero similarity between the endpoints: terms reduce to plain weights
  auto disjoint = MultiplexNetwork::build(6, {{0, 0, 2, 3.0}, {0, 1, 3, 5.0}});
  ScoreTable disjoint_scores = full_cn_table(disjoint, 0);
  CHECK(pair_weight(disjoint, 0, disjoint_scores, 0, 1, 1.0) == 4.0);

  // zero best-neighbor similarity with nonzero S_XY cannot blow up: the
  // affected term collapses to 1 by convention
  auto shared = MultiplexNetwork::build(4, {{0, 0, 2, 2.0}, {0, 1, 2, 6.0}});
  ScoreTable shared_scores = full_cn_table(shared, 0);
  // A = 2 with cn(2,0) = 0, B = 2 with cn(2,1) = 0, S_XY = cn(0,1) = 1
  CHECK(pair_weight(shared, 0, shared_scores, 0, 1, 1.0) == 4.0);
}

TEST_CASE("behavior multiplier scales incident edge weights") {
  auto net = worked_example();
  ScoreTable scores = full_cn_table(net, 0);
  CHECK(pair_weight(net, 0, scores, 0, 1, 1.0, 2.0) == 5.5);
}

TEST_CASE("allocation on a single layer reduces to pair weights") {
  auto net = worked_example();
  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);

  RankedPrediction ranking = allocate_scores(net, config, training, candidates);
  CHECK(ranking.single_layer);
  CHECK(ranking.method == "nlflp");
  CHECK(ranking.entries.size() == candidates.size());

  ScoreTable scores = full_cn_table(net, 0);
  for (const ScoredPair& e : ranking.entries) {
    CHECK(e.score == pair_weight(net, 0, scores, e.pair.a, e.pair.b, 1.0));
  }
  // descending by score with pair-ascending ties
  for (std::size_t i = 1; i < ranking.entries.size(); ++i) {
    const ScoredPair& prev = ranking.entries[i - 1];
    const ScoredPair& cur = ranking.entries[i];
    bool ordered = prev.score > cur.score ||
                   (prev.score == cur.score && prev.pair < cur.pair);
    CHECK(ordered);
  }
}

TEST_CASE("allocation agrees with standalone operations on random networks") {
  for (std::uint32_t seed : {21u, 22u, 23u}) {
    auto net = oracle::random_multiplex(seed, 14, 3, 0.25);
    PredictionConfig config;
    config.base_method = SimilarityIndex::AA;
    const PairSet& training = net.layer(0).edge_set();
    PairSet candidates = net.universal_pairs().minus(training);
    if (candidates.empty() || training.empty()) continue;

    RankedPrediction ranking = allocate_scores(net, config, training, candidates);

    double rho_sum = 0.0;
    std::size_t used = 0;
    for (int l = 1; l < 3; ++l) {
      if (net.layer(l).edge_count() == 0) continue;
      rho_sum += rho(net, 0, l, config.rho_damping);
      ++used;
    }
    double rho_value = used > 0 ? rho_sum / static_cast<double>(used) : 1.0;
    ScoreTable scores =
        score_all_pairs(net, 0, SimilarityIndex::AA, net.universal_pairs());

    for (const ScoredPair& e : ranking.entries) {
      double expected = pair_weight(net, 0, scores, e.pair.a, e.pair.b, rho_value);
      for (int l = 1; l < 3; ++l) {
        double support = predictor_support(net, 0, l, training);
        expected *= net.layer(l).has_edge(e.pair.a, e.pair.b) ? support
                                                              : 1.0 - support;
      }
      CHECK(e.score == expected);
    }
  }
}

TEST_CASE("predictor layer membership multiplies scores by the support factors") {
  // Target layer: an 8-edge path. Each predictor layer keeps seven of those
  // edges (support (7+1)/(8+2) = 0.8) plus the shortcut (0,2); edge counts
  // stay equal across layers so the edge-count ratio is exactly 1.
  std::vector<EdgeRecord> edges;
  for (NodeId u = 0; u < 8; ++u) {
    edges.push_back({0, u, static_cast<NodeId>(u + 1), 1.0});
  }
  for (NodeId u = 0; u < 7; ++u) {
    edges.push_back({1, u, static_cast<NodeId>(u + 1), 1.0});
  }
  edges.push_back({1, 0, 2, 1.0});
  for (NodeId u = 1; u < 8; ++u) {
    edges.push_back({2, u, static_cast<NodeId>(u + 1), 1.0});
  }
  edges.push_back({2, 0, 2, 1.0});
  auto net = MultiplexNetwork::build(9, edges);

  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);
  RankedPrediction full = allocate_scores(net, config, training, candidates);
  CHECK_FALSE(full.single_layer);
  CHECK(predictor_support(net, 0, 1, training) == 0.8);
  CHECK(predictor_support(net, 0, 2, training) == 0.8);
  CHECK(rho(net, 0, 1, true) == 1.0);
  CHECK(rho(net, 0, 2, true) == 1.0);

  std::vector<EdgeRecord> base_edges;
  for (const EdgeRecord& e : edges) {
    if (e.layer == 0) base_edges.push_back(e);
  }
  auto single = MultiplexNetwork::build(9, base_edges, 1);
  RankedPrediction base = allocate_scores(single, config, training, candidates);
  CHECK(base.single_layer);

  auto find_score = [](const RankedPrediction& r, Pair p) {
    for (const ScoredPair& e : r.entries) {
      if (e.pair == p) return e.score;
    }
    FAIL("pair not found in ranking");
    return 0.0;
  };

  const double support = 0.8;
  double present = find_score(base, Pair{0, 2});  // in both predictors
  present *= support;
  present *= support;
  CHECK(find_score(full, Pair{0, 2}) == present);

  double absent = find_score(base, Pair{0, 3});  // in neither predictor
  absent *= 1.0 - support;
  absent *= 1.0 - support;
  CHECK(find_score(full, Pair{0, 3}) == absent);
}

TEST_CASE("support above one half promotes predictor-layer members") {
  // Symmetric target layer: candidates (1,4) and (2,4) are exchangeable by
  // the automorphism swapping nodes 1 and 2. Only (1,4) recurs in the
  // predictor layer, whose support is high.
  std::vector<EdgeRecord> edges{{0, 0, 1, 1.0}, {0, 0, 2, 1.0}, {0, 3, 4, 1.0}};
  edges.push_back({1, 0, 1, 1.0});
  edges.push_back({1, 0, 2, 1.0});
  edges.push_back({1, 3, 4, 1.0});
  edges.push_back({1, 1, 4, 1.0});
  auto net = MultiplexNetwork::build(5, edges);

  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);
  RankedPrediction ranking = allocate_scores(net, config, training, candidates);
  CHECK(predictor_support(net, 0, 1, training) > 0.5);

  std::size_t rank_present = 0, rank_absent = 0;
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    if (ranking.entries[i].pair == Pair{1, 4}) rank_present = i;
    if (ranking.entries[i].pair == Pair{2, 4}) rank_absent = i;
  }
  CHECK(rank_present < rank_absent);
}

TEST_CASE("allocation validates its inputs") {
  auto net = worked_example();
  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs();  // overlaps training

  CHECK_THROWS_AS(allocate_scores(net, config, training, candidates),
                  std::invalid_argument);

  PredictionConfig bad_weights;
  bad_weights.behavior_weights = {1.0, 2.0};  // one layer only
  CHECK_THROWS_AS(allocate_scores(net, bad_weights, training,
                                  net.universal_pairs().minus(training)),
                  std::invalid_argument);

  PredictionConfig negative;
  negative.behavior_weights = {-1.0};
  CHECK_THROWS_AS(allocate_scores(net, negative, training,
                                  net.universal_pairs().minus(training)),
                  std::invalid_argument);

  PredictionConfig bad_layer;
  bad_layer.target_layer = 5;
  CHECK_THROWS_AS(allocate_scores(net, bad_layer, training,
                                  net.universal_pairs().minus(training)),
                  std::out_of_range);
}

TEST_CASE("ranking is invariant under target weight scaling") {
  auto net = oracle::random_multiplex(77, 16, 3, 0.3);
  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);
  RankedPrediction base = allocate_scores(net, config, training, candidates);

  for (double c : {0.5, 3.0, 10.0}) {
    MultiplexNetwork scaled = net.with_scaled_weights(0, c);
    RankedPrediction other = allocate_scores(scaled, config, training, candidates);
    REQUIRE(other.entries.size() == base.entries.size());
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
      CHECK(other.entries[i].pair == base.entries[i].pair);
    }
  }
}

TEST_CASE("allocation is deterministic") {
  auto net = oracle::random_multiplex(42, 15, 2, 0.3);
  PredictionConfig config;
  const PairSet& training = net.layer(0).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);
  RankedPrediction a = allocate_scores(net, config, training, candidates);
  RankedPrediction b = allocate_scores(net, config, training, candidates);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].pair == b.entries[i].pair);
    CHECK(a.entries[i].score == b.entries[i].score);
  }
}

TEST_CASE("score table ranking orders by score then pair") {
  ScoreTable table(SimilarityIndex::CN, 0,
                   {{0, 1}, {0, 2}, {1, 2}, {1, 3}},
                   {1.0, 3.0, 3.0, 0.5});
  RankedPrediction ranking = ranked_from_scores(table);
  REQUIRE(ranking.entries.size() == 4);
  CHECK(ranking.entries[0].pair == Pair{0, 2});
  CHECK(ranking.entries[1].pair == Pair{1, 2});
  CHECK(ranking.entries[2].pair == Pair{0, 1});
  CHECK(ranking.entries[3].pair == Pair{1, 3});
  CHECK(ranking.method == "cn");
}
