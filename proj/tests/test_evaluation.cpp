#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlflp/evaluation.hpp"
#include "nlflp/rng.hpp"
#include "oracles.hpp"

using namespace nlflp;

namespace {

MultiplexNetwork path_network(std::size_t edge_count) {
  std::vector<EdgeRecord> edges;
  for (NodeId u = 0; u < edge_count; ++u) {
    edges.push_back({0, u, static_cast<NodeId>(u + 1), 1.0});
  }
  return MultiplexNetwork::build(edge_count + 1, edges);
}

ScoreTable table_of(std::vector<Pair> pairs, std::vector<double> values) {
  return ScoreTable(SimilarityIndex::CN, 0, std::move(pairs), std::move(values));
}

}  // namespace

TEST_CASE("splits partition the target layer edge set") {
  auto net = oracle::random_multiplex(5, 24, 2, 0.2);
  const PairSet& edges = net.layer(0).edge_set();
  SplitSpec spec;
  spec.holdout_fraction = 0.2;
  spec.trials = 6;

  for (std::size_t trial = 0; trial < spec.trials; ++trial) {
    Split s = split_edges(net, 0, spec, trial);
    CHECK(s.training.size() + s.test.size() == edges.size());
    CHECK(s.training.intersection_size(s.test) == 0);
    for (const Pair& p : s.test.pairs()) CHECK(edges.contains(p));
    for (const Pair& p : s.training.pairs()) CHECK(edges.contains(p));
  }
}

TEST_CASE("split sizes follow the holdout specification") {
  auto net = path_network(100);
  SplitSpec spec;
  spec.holdout_fraction = 0.1;
  Split s = split_edges(net, 0, spec, 0);
  CHECK(s.test.size() == 10);
  CHECK(s.training.size() == 90);

  // rounding clamps into [1, m-1]
  auto tiny = path_network(5);
  SplitSpec low;
  low.holdout_fraction = 0.01;
  CHECK(split_edges(tiny, 0, low, 0).test.size() == 1);
  SplitSpec high;
  high.holdout_fraction = 0.99;
  CHECK(split_edges(tiny, 0, high, 0).test.size() == 4);

  SplitSpec count;
  count.mode = SplitSpec::Mode::Count;
  count.holdout_count = 37;
  CHECK(split_edges(net, 0, count, 0).test.size() == 37);
}

TEST_CASE("splits are deterministic per trial and differ across trials") {
  auto net = path_network(100);
  SplitSpec spec;
  spec.trials = 3;
  Split a = split_edges(net, 0, spec, 1);
  Split b = split_edges(net, 0, spec, 1);
  CHECK(a.test.pairs() == b.test.pairs());
  CHECK(a.training.pairs() == b.training.pairs());

  Split other = split_edges(net, 0, spec, 2);
  CHECK(a.test.pairs() != other.test.pairs());

  SplitSpec reseeded = spec;
  reseeded.seed = 43;
  Split c = split_edges(net, 0, reseeded, 1);
  CHECK(a.test.pairs() != c.test.pairs());
}

TEST_CASE("split validation") {
  auto net = path_network(10);

  SplitSpec bad_fraction;
  bad_fraction.holdout_fraction = 0.0;
  CHECK_THROWS_AS(split_edges(net, 0, bad_fraction, 0), std::invalid_argument);
  bad_fraction.holdout_fraction = 1.0;
  CHECK_THROWS_AS(split_edges(net, 0, bad_fraction, 0), std::invalid_argument);

  SplitSpec spec;
  CHECK_THROWS_AS(split_edges(net, 0, spec, spec.trials), std::invalid_argument);
  SplitSpec no_trials;
  no_trials.trials = 0;
  CHECK_THROWS_AS(split_edges(net, 0, no_trials, 0), std::invalid_argument);

  auto single_edge = path_network(1);
  CHECK_THROWS_AS(split_edges(single_edge, 0, spec, 0), std::invalid_argument);

  SplitSpec count;
  count.mode = SplitSpec::Mode::Count;
  count.holdout_count = 0;
  CHECK_THROWS_AS(split_edges(net, 0, count, 0), std::invalid_argument);
  count.holdout_count = 10;  // == edge count
  CHECK_THROWS_AS(split_edges(net, 0, count, 0), std::invalid_argument);
}

TEST_CASE("pair score map resolves scores and defaults to zero") {
  ScoreTable table = table_of({{0, 1}, {0, 2}, {1, 2}}, {3.0, 1.0, 2.0});
  PairScoreMap from_table(table);
  CHECK(from_table.at_or_zero(Pair{0, 2}) == 1.0);
  CHECK(from_table.at_or_zero(Pair{5, 6}) == 0.0);

  PairScoreMap from_ranking(ranked_from_scores(table));
  CHECK(from_ranking.size() == from_table.size());
  for (Pair p : {Pair{0, 1}, Pair{0, 2}, Pair{1, 2}, Pair{3, 4}}) {
    CHECK(from_ranking.at_or_zero(p) == from_table.at_or_zero(p));
  }
}

TEST_CASE("exhaustive AUC on hand-checked pools") {
  ScoreTable table = table_of({{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {2.0, 1.0, 1.0, 0.0});
  PairScoreMap scores(table);
  PairSet test({{0, 1}, {2, 3}});
  PairSet non_edges({{4, 5}, {6, 7}});

  AucResult r = auc_exhaustive(scores, test, non_edges);
  CHECK(r.alpha == 4);
  CHECK(r.beta == 3);
  CHECK(r.gamma == 1);
  CHECK(r.auc == 0.875);
}

TEST_CASE("AUC endpoints: perfect separation and indistinguishable scores") {
  ScoreTable perfect = table_of({{0, 1}, {0, 2}}, {1.0, 1.0});
  PairScoreMap scores(perfect);
  PairSet test({{0, 1}, {0, 2}});
  PairSet non_edges({{1, 2}, {1, 3}, {2, 3}});  // absent pairs score 0
  CHECK(auc_exhaustive(scores, test, non_edges).auc == 1.0);
  CHECK(auc_sampled(scores, test, non_edges, 500, 7).auc == 1.0);

  ScoreTable flat = table_of({}, {});
  PairScoreMap zero(flat);
  AucResult tie = auc_exhaustive(zero, test, non_edges);
  CHECK(tie.gamma == tie.alpha);
  CHECK(tie.auc == 0.5);
}

TEST_CASE("exhaustive AUC equals the rank-sum statistic") {
  for (std::uint32_t seed : {3u, 4u, 5u}) {
    auto net = oracle::random_multiplex(seed, 16, 1, 0.25);
    const PairSet& edges = net.layer(0).edge_set();
    PairSet non_edges = net.universal_pairs().minus(edges);
    if (edges.empty() || non_edges.empty()) continue;

    // Coarse integer-ish scores force plenty of ties.
    std::vector<Pair> pairs = net.universal_pairs().pairs();
    std::vector<double> values;
    values.reserve(pairs.size());
    for (const Pair& p : pairs) {
      values.push_back(static_cast<double>((p.a * 31 + p.b * 17) % 7) / 3.0);
    }
    PairScoreMap scores(table_of(pairs, values));

    std::vector<double> positive, negative;
    for (const Pair& p : edges.pairs()) positive.push_back(scores.at_or_zero(p));
    for (const Pair& p : non_edges.pairs()) negative.push_back(scores.at_or_zero(p));

    AucResult r = auc_exhaustive(scores, edges, non_edges);
    CHECK(r.auc == doctest::Approx(oracle::mann_whitney_auc(positive, negative))
                       .epsilon(1e-12));
  }
}

TEST_CASE("sampled AUC is deterministic and counts every comparison") {
  ScoreTable table = table_of({{0, 1}, {2, 3}, {4, 5}}, {2.0, 1.0, 0.5});
  PairScoreMap scores(table);
  PairSet test({{0, 1}, {2, 3}});
  PairSet non_edges({{4, 5}, {6, 7}});

  AucResult a = auc_sampled(scores, test, non_edges, 1000, 99);
  AucResult b = auc_sampled(scores, test, non_edges, 1000, 99);
  CHECK(a.alpha == 1000);
  CHECK(a.beta == b.beta);
  CHECK(a.gamma == b.gamma);
  CHECK(a.auc == b.auc);
  CHECK(a.beta + a.gamma <= a.alpha);
}

TEST_CASE("AUC validation") {
  PairScoreMap scores(table_of({{0, 1}}, {1.0}));
  PairSet some({{0, 1}});
  PairSet empty;
  CHECK_THROWS_AS(auc_exhaustive(scores, empty, some), std::invalid_argument);
  CHECK_THROWS_AS(auc_exhaustive(scores, some, empty), std::invalid_argument);
  CHECK_THROWS_AS(auc_sampled(scores, some, some, 0, 1), std::invalid_argument);
}

TEST_CASE("precision counts held-out hits in the top of the ranking") {
  RankedPrediction ranking;
  ranking.entries = {{{0, 1}, 5.0}, {{0, 2}, 4.0}, {{0, 3}, 3.0},
                     {{0, 4}, 2.0}, {{0, 5}, 1.0}};
  PairSet test({{0, 1}, {0, 3}, {0, 5}});

  CHECK(precision_at(ranking, test, 1) == 1.0);
  CHECK(precision_at(ranking, test, 2) == 0.5);
  CHECK(precision_at(ranking, test, 4) == 0.5);
  CHECK(precision_at(ranking, test, 5) == 0.6);
  CHECK(precision_at(ranking, PairSet{}, 5) == 0.0);

  CHECK_THROWS_AS(precision_at(ranking, test, 0), std::invalid_argument);
  CHECK_THROWS_AS(precision_at(ranking, test, 6), std::invalid_argument);
}

TEST_CASE("method names round-trip") {
  for (Method m : all_methods()) {
    auto parsed = parse_method(method_name(m));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == m);
  }
  CHECK_FALSE(parse_method("katz").has_value());
  CHECK(all_methods().size() == 6);
}

TEST_CASE("benchmark produces one record per method and trial") {
  auto net = oracle::random_multiplex(9, 30, 2, 0.15);
  PredictionConfig config;
  SplitSpec spec;
  spec.trials = 5;
  std::vector<Method> methods{Method::NLFLP, Method::CN, Method::AA};

  auto results = run_benchmark(net, config, spec, methods, 2000);
  REQUIRE(results.size() == 3);
  const std::size_t m = net.layer(0).edge_count();
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].method == methods[i]);
    REQUIRE(results[i].per_trial.size() == 5);
    for (const TrialRecord& t : results[i].per_trial) {
      CHECK(t.training_size + t.test_size == m);
      CHECK(t.alpha == 2000);
      CHECK(t.beta + t.gamma <= t.alpha);
      CHECK(t.auc >= 0.0);
      CHECK(t.auc <= 1.0);
      CHECK(t.precision >= 0.0);
      CHECK(t.precision <= 1.0);
      CHECK(t.split_seed == derive_seed(spec.seed, t.trial));
    }

    // aggregates recompute from the trial records
    double mean = 0.0;
    for (const TrialRecord& t : results[i].per_trial) mean += t.auc;
    mean /= 5.0;
    CHECK(results[i].auc_mean == doctest::Approx(mean).epsilon(1e-15));
    double var = 0.0;
    for (const TrialRecord& t : results[i].per_trial) {
      var += (t.auc - mean) * (t.auc - mean);
    }
    CHECK(results[i].auc_std == doctest::Approx(std::sqrt(var / 4.0)).epsilon(1e-12));
  }
}

TEST_CASE("benchmark results do not depend on method order") {
  auto net = oracle::random_multiplex(11, 26, 2, 0.18);
  PredictionConfig config;
  SplitSpec spec;
  spec.trials = 4;

  auto forward = run_benchmark(net, config, spec, {Method::CN, Method::NLFLP}, 1500);
  auto reversed = run_benchmark(net, config, spec, {Method::NLFLP, Method::CN}, 1500);

  REQUIRE(forward.size() == 2);
  REQUIRE(reversed.size() == 2);
  for (const EvaluationResult& lhs : forward) {
    const EvaluationResult& rhs =
        lhs.method == reversed[0].method ? reversed[0] : reversed[1];
    REQUIRE(lhs.method == rhs.method);
    CHECK(lhs.auc_mean == rhs.auc_mean);
    CHECK(lhs.precision_mean == rhs.precision_mean);
    REQUIRE(lhs.per_trial.size() == rhs.per_trial.size());
    for (std::size_t t = 0; t < lhs.per_trial.size(); ++t) {
      CHECK(lhs.per_trial[t].auc == rhs.per_trial[t].auc);
      CHECK(lhs.per_trial[t].beta == rhs.per_trial[t].beta);
      CHECK(lhs.per_trial[t].precision == rhs.per_trial[t].precision);
    }
  }
}

TEST_CASE("benchmark is reproducible and flags single-layer inputs") {
  auto net = oracle::random_multiplex(13, 24, 1, 0.2);
  PredictionConfig config;
  SplitSpec spec;
  spec.trials = 3;

  auto a = run_benchmark(net, config, spec, {Method::NLFLP, Method::CN}, 1000);
  auto b = run_benchmark(net, config, spec, {Method::NLFLP, Method::CN}, 1000);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].auc_mean == b[i].auc_mean);
    CHECK(a[i].auc_std == b[i].auc_std);
    CHECK(a[i].precision_mean == b[i].precision_mean);
  }
  CHECK(a[0].single_layer_warning);        // cross-layer method had one layer
  CHECK_FALSE(a[1].single_layer_warning);  // baselines never warn
}
