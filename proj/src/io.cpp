#include "nlflp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "nlflp/rng.hpp"

namespace nlflp {
namespace {

using nlohmann::json;

template <typename T>
bool parse_full(const std::string& token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == delim) {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw io_error("failed while writing " + path);
}

std::string layer_display_name(const MultiplexNetwork& net, int layer) {
  if (net.layer_names().size() == net.layer_count()) {
    return net.layer_names()[static_cast<std::size_t>(layer)];
  }
  return std::to_string(layer);
}

// Lexicographic rank of unordered pairs: (0,1),(0,2),...,(0,n-1),(1,2),...
std::uint64_t pairs_before_first(std::uint64_t u, std::uint64_t n) {
  return u * (n - 1) - u * (u - 1) / 2;
}

Pair pair_from_index(std::uint64_t index, std::size_t node_count) {
  const std::uint64_t n = node_count;
  std::uint64_t lo = 0;        // pairs_before_first(lo) <= index
  std::uint64_t hi = n - 1;    // pairs_before_first(hi) > index
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (pairs_before_first(mid, n) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::uint64_t u = lo;
  std::uint64_t v = u + 1 + (index - pairs_before_first(u, n));
  return Pair{static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

// Floyd's algorithm: `count` distinct values from [0, total), returned sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t total,
                                           std::uint64_t count) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t j = total - count; j < total; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (chosen.insert(t).second) {
      out.push_back(t);
    } else {
      chosen.insert(j);
      out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

json ranking_to_json(const RankedPrediction& ranking, const MultiplexNetwork* labels) {
  json entries = json::array();
  for (const ScoredPair& e : ranking.entries) {
    json row;
    row["u"] = e.pair.a;
    row["v"] = e.pair.b;
    row["label_u"] = labels ? labels->label_of(e.pair.a) : static_cast<long long>(e.pair.a);
    row["label_v"] = labels ? labels->label_of(e.pair.b) : static_cast<long long>(e.pair.b);
    row["score"] = e.score;
    entries.push_back(std::move(row));
  }
  json doc;
  doc["type"] = "ranking";
  doc["target_layer"] = ranking.target_layer;
  doc["method"] = ranking.method;
  doc["single_layer_warning"] = ranking.single_layer;
  doc["entries"] = std::move(entries);
  return doc;
}

json trial_to_json(const TrialRecord& t) {
  json row;
  row["trial"] = t.trial;
  row["split_seed"] = t.split_seed;
  row["training_size"] = t.training_size;
  row["test_size"] = t.test_size;
  row["alpha"] = t.alpha;
  row["beta"] = t.beta;
  row["gamma"] = t.gamma;
  row["auc"] = t.auc;
  row["precision"] = t.precision;
  return row;
}

json matrix_to_json(const std::vector<double>& values, std::size_t dim) {
  json rows = json::array();
  for (std::size_t i = 0; i < dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < dim; ++j) {
      double v = values[i * dim + j];
      if (std::isnan(v)) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string fmt_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw io_error("cannot format number");
  return std::string(buf, ptr);
}

std::string format_name(OutputFormat format) {
  return format == OutputFormat::CSV ? "csv" : "json";
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::CSV;
  if (name == "json") return OutputFormat::JSON;
  return std::nullopt;
}

MultiplexNetwork load_multiplex_edgelist(std::istream& in, const std::string& source) {
  struct RawEdge {
    long long layer;
    long long u;
    long long v;
    double weight;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    std::string field;
    while (tokens >> field) fields.push_back(field);
    if (fields.empty() || fields[0][0] == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno);
    if (fields.size() != 3 && fields.size() != 4) {
      throw io_error(where + ": expected 3 or 4 fields, got " +
                     std::to_string(fields.size()));
    }
    RawEdge e{};
    if (!parse_full(fields[0], e.layer)) {
      throw io_error(where + ": malformed layer id '" + fields[0] + "'");
    }
    if (!parse_full(fields[1], e.u)) {
      throw io_error(where + ": malformed node id '" + fields[1] + "'");
    }
    if (!parse_full(fields[2], e.v)) {
      throw io_error(where + ": malformed node id '" + fields[2] + "'");
    }
    e.weight = 1.0;
    if (fields.size() == 4) {
      if (!parse_full(fields[3], e.weight) || !std::isfinite(e.weight)) {
        throw io_error(where + ": malformed weight '" + fields[3] + "'");
      }
      if (e.weight <= 0.0) {
        throw io_error(where + ": non-positive weight " + fields[3]);
      }
    }
    if (e.u == e.v) {
      throw io_error(where + ": self-loop on node " + fields[1]);
    }
    raw.push_back(e);
  }
  if (in.bad()) throw io_error("read failure on " + source);
  if (raw.empty()) throw io_error(source + ": no edges");

  std::vector<long long> labels;
  std::vector<long long> layer_ids;
  labels.reserve(raw.size() * 2);
  for (const RawEdge& e : raw) {
    labels.push_back(e.u);
    labels.push_back(e.v);
    layer_ids.push_back(e.layer);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::sort(layer_ids.begin(), layer_ids.end());
  layer_ids.erase(std::unique(layer_ids.begin(), layer_ids.end()), layer_ids.end());

  std::unordered_map<long long, NodeId> node_of;
  node_of.reserve(labels.size() * 2);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    node_of[labels[i]] = static_cast<NodeId>(i);
  }
  std::unordered_map<long long, int> layer_of;
  for (std::size_t i = 0; i < layer_ids.size(); ++i) {
    layer_of[layer_ids[i]] = static_cast<int>(i);
  }

  std::vector<EdgeRecord> records;
  records.reserve(raw.size());
  for (const RawEdge& e : raw) {
    records.push_back(EdgeRecord{layer_of[e.layer], node_of[e.u], node_of[e.v], e.weight});
  }
  // Canonical record order makes duplicate-weight summation independent of
  // the input's line order.
  std::sort(records.begin(), records.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    auto key = [](const EdgeRecord& e) {
      return std::tuple(e.layer, make_pair(e.u, e.v), e.weight);
    };
    return key(a) < key(b);
  });

  MultiplexNetwork net =
      MultiplexNetwork::build(labels.size(), records, layer_ids.size());
  net.set_labels(std::move(labels));
  std::vector<std::string> names;
  names.reserve(layer_ids.size());
  for (long long id : layer_ids) names.push_back(std::to_string(id));
  net.set_layer_names(std::move(names));
  return net;
}

MultiplexNetwork load_multiplex_edgelist(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_multiplex_edgelist(in, path);
}

void write_multiplex_edgelist(const MultiplexNetwork& net, std::ostream& out) {
  out << "# layer u v weight\n";
  for (int l = 0; l < static_cast<int>(net.layer_count()); ++l) {
    const LayerGraph& g = net.layer(l);
    const std::string name = layer_display_name(net, l);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Pair& e = g.edge_set()[i];
      out << name << ' ' << net.label_of(e.a) << ' ' << net.label_of(e.b) << ' '
          << fmt_double(g.weight_of_edge(i)) << '\n';
    }
  }
}

void write_multiplex_edgelist(const MultiplexNetwork& net, const std::string& path) {
  std::ofstream out = open_output(path);
  write_multiplex_edgelist(net, out);
  finish_output(out, path);
}

MultiplexNetwork generate_synthetic(const SyntheticSpec& spec) {
  if (spec.nodes < 2) {
    throw std::invalid_argument("synthetic network needs at least 2 nodes");
  }
  if (spec.layers < 1) {
    throw std::invalid_argument("synthetic network needs at least 1 layer");
  }
  if (!(spec.base_density > 0.0 && spec.base_density < 1.0)) {
    throw std::invalid_argument("base density must lie in (0,1)");
  }
  if (!(spec.interlayer_correlation >= 0.0 && spec.interlayer_correlation <= 1.0)) {
    throw std::invalid_argument("interlayer correlation must lie in [0,1]");
  }
  if (spec.target_layer_density &&
      !(*spec.target_layer_density > 0.0 && *spec.target_layer_density < 1.0)) {
    throw std::invalid_argument("target layer density must lie in (0,1)");
  }

  const std::uint64_t total =
      static_cast<std::uint64_t>(spec.nodes) * (spec.nodes - 1) / 2;
  const double d0 = spec.target_layer_density.value_or(spec.base_density);
  const auto m0 = static_cast<std::uint64_t>(
      std::llround(d0 * static_cast<double>(total)));
  const auto m_other = static_cast<std::uint64_t>(
      std::llround(spec.base_density * static_cast<double>(total)));
  if (m0 < 1 || m0 > total) {
    throw std::invalid_argument("layer 0 density yields no valid edge count");
  }
  if (spec.layers > 1 && (m_other < 1 || m_other > total)) {
    throw std::invalid_argument("base density yields no valid edge count");
  }
  const auto expected_kept = static_cast<std::uint64_t>(
      std::llround(spec.interlayer_correlation * static_cast<double>(m0)));
  if (spec.layers > 1 && expected_kept > m_other) {
    throw std::invalid_argument(
        "interlayer correlation keeps more edges than the layer density allows");
  }

  Rng rng(derive_seed(spec.seed, 0));
  std::vector<std::vector<std::uint64_t>> layer_edges(spec.layers);
  layer_edges[0] = sample_distinct(rng, total, m0);

  for (std::size_t l = 1; l < spec.layers; ++l) {
    std::vector<std::uint64_t> kept;
    kept.reserve(layer_edges[0].size());
    for (std::uint64_t idx : layer_edges[0]) {
      if (rng.uniform01() < spec.interlayer_correlation) kept.push_back(idx);
    }
    if (kept.size() > m_other) {
      // Binomial overshoot of the feasibility bound: trim at random.
      for (std::size_t i = 0; i < m_other; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(kept.size() - i));
        std::swap(kept[i], kept[j]);
      }
      kept.resize(m_other);
      std::sort(kept.begin(), kept.end());
    }
    std::unordered_set<std::uint64_t> used(kept.begin(), kept.end());
    std::vector<std::uint64_t> edges = kept;
    while (edges.size() < m_other) {
      std::uint64_t idx = rng.below(total);
      if (used.insert(idx).second) edges.push_back(idx);
    }
    std::sort(edges.begin(), edges.end());
    layer_edges[l] = std::move(edges);
  }

  // Edge sets are final; weights draw in (layer, pair) order.
  std::vector<EdgeRecord> records;
  for (std::size_t l = 0; l < spec.layers; ++l) {
    for (std::uint64_t idx : layer_edges[l]) {
      Pair p = pair_from_index(idx, spec.nodes);
      records.push_back(
          EdgeRecord{static_cast<int>(l), p.a, p.b, rng.uniform(1.0, 5.0)});
    }
  }
  return MultiplexNetwork::build(spec.nodes, records, spec.layers);
}

void write_ranking(const RankedPrediction& ranking, OutputFormat format,
                   std::ostream& out, const MultiplexNetwork* labels) {
  if (format == OutputFormat::CSV) {
    out << "rank,u,v,label_u,label_v,score\n";
    std::size_t rank = 1;
    for (const ScoredPair& e : ranking.entries) {
      long long lu = labels ? labels->label_of(e.pair.a) : static_cast<long long>(e.pair.a);
      long long lv = labels ? labels->label_of(e.pair.b) : static_cast<long long>(e.pair.b);
      out << rank++ << ',' << e.pair.a << ',' << e.pair.b << ',' << lu << ','
          << lv << ',' << fmt_double(e.score) << '\n';
    }
  } else {
    out << ranking_to_json(ranking, labels).dump(2) << '\n';
  }
}

void write_ranking(const RankedPrediction& ranking, OutputFormat format,
                   const std::string& path, const MultiplexNetwork* labels) {
  std::ofstream out = open_output(path);
  write_ranking(ranking, format, out, labels);
  finish_output(out, path);
}

RankedPrediction read_ranking_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
    RankedPrediction ranking;
    ranking.target_layer = doc.at("target_layer").get<int>();
    ranking.method = doc.at("method").get<std::string>();
    ranking.single_layer = doc.at("single_layer_warning").get<bool>();
    for (const json& row : doc.at("entries")) {
      ranking.entries.push_back(
          ScoredPair{make_pair(row.at("u").get<NodeId>(), row.at("v").get<NodeId>()),
                     row.at("score").get<double>()});
    }
    return ranking;
  } catch (const json::exception& e) {
    throw io_error(std::string("malformed ranking document: ") + e.what());
  }
}

RankedPrediction read_ranking_json(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_ranking_json(in);
}

RankedPrediction read_ranking_csv(std::istream& in) {
  RankedPrediction ranking;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != "rank,u,v,label_u,label_v,score") {
        throw io_error("unexpected ranking CSV header: " + line);
      }
      continue;
    }
    std::vector<std::string> fields = split_fields(line, ',');
    if (fields.size() != 6) {
      throw io_error("ranking CSV line " + std::to_string(lineno) +
                     ": expected 6 fields");
    }
    NodeId u = 0, v = 0;
    double score = 0.0;
    if (!parse_full(fields[1], u) || !parse_full(fields[2], v) ||
        !parse_full(fields[5], score)) {
      throw io_error("ranking CSV line " + std::to_string(lineno) +
                     ": malformed values");
    }
    ranking.entries.push_back(ScoredPair{make_pair(u, v), score});
  }
  return ranking;
}

RankedPrediction read_ranking_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_ranking_csv(in);
}

void write_evaluation(const std::vector<EvaluationResult>& results,
                      const EvaluationContext& context, OutputFormat format,
                      std::ostream& out) {
  if (format == OutputFormat::CSV) {
    out << "method,trial,split_seed,training_size,test_size,alpha,beta,gamma,"
           "auc,precision\n";
    for (const EvaluationResult& r : results) {
      for (const TrialRecord& t : r.per_trial) {
        out << method_name(r.method) << ',' << t.trial << ',' << t.split_seed
            << ',' << t.training_size << ',' << t.test_size << ',' << t.alpha
            << ',' << t.beta << ',' << t.gamma << ',' << fmt_double(t.auc)
            << ',' << fmt_double(t.precision) << '\n';
      }
    }
    return;
  }

  json doc;
  doc["type"] = "evaluation";
  doc["input"] = context.input;
  doc["target_layer"] = context.target_layer;
  doc["base_method"] = similarity_name(context.base_method);
  doc["rho_damping"] = context.rho_damping;
  json split;
  split["mode"] =
      context.split.mode == SplitSpec::Mode::Fraction ? "fraction" : "count";
  if (context.split.mode == SplitSpec::Mode::Fraction) {
    split["holdout_fraction"] = context.split.holdout_fraction;
  } else {
    split["holdout_count"] = context.split.holdout_count;
  }
  split["trials"] = context.split.trials;
  split["seed"] = context.split.seed;
  doc["split"] = std::move(split);
  doc["auc_comparisons"] = context.auc_comparisons;
  json methods = json::array();
  for (const EvaluationResult& r : results) {
    json entry;
    entry["method"] = method_name(r.method);
    entry["single_layer_warning"] = r.single_layer_warning;
    entry["auc_mean"] = r.auc_mean;
    entry["auc_std"] = r.auc_std;
    entry["precision_mean"] = r.precision_mean;
    entry["precision_std"] = r.precision_std;
    json trials = json::array();
    for (const TrialRecord& t : r.per_trial) trials.push_back(trial_to_json(t));
    entry["trials"] = std::move(trials);
    methods.push_back(std::move(entry));
  }
  doc["results"] = std::move(methods);
  out << doc.dump(2) << '\n';
}

void write_evaluation(const std::vector<EvaluationResult>& results,
                      const EvaluationContext& context, OutputFormat format,
                      const std::string& path) {
  std::ofstream out = open_output(path);
  write_evaluation(results, context, format, out);
  finish_output(out, path);
}

void write_layer_report(const LayerSimilarityReport& report, OutputFormat format,
                        std::ostream& out) {
  const std::size_t m = report.layer_count;
  if (format == OutputFormat::CSV) {
    out << "metric,i,j,value\n";
    for (std::size_t l = 0; l < m; ++l) {
      out << "edges," << l << ",," << report.edge_counts[l] << '\n';
    }
    for (std::size_t l = 0; l < m; ++l) {
      out << "density," << l << ",," << fmt_double(report.densities[l]) << '\n';
    }
    auto matrix = [&](const char* name, const std::vector<double>& values) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          out << name << ',' << i << ',' << j << ','
              << fmt_double(values[i * m + j]) << '\n';
        }
      }
    };
    matrix("s_cw", report.s_cw);
    matrix("aasn", report.aasn);
    matrix("likelihood", report.likelihood);
    return;
  }

  json doc;
  doc["type"] = "layer_report";
  doc["node_count"] = report.node_count;
  doc["layer_count"] = report.layer_count;
  doc["edges"] = report.edge_counts;
  doc["densities"] = report.densities;
  doc["s_cw"] = matrix_to_json(report.s_cw, m);
  doc["aasn"] = matrix_to_json(report.aasn, m);
  doc["likelihood"] = matrix_to_json(report.likelihood, m);
  out << doc.dump(2) << '\n';
}

void write_layer_report(const LayerSimilarityReport& report, OutputFormat format,
                        const std::string& path) {
  std::ofstream out = open_output(path);
  write_layer_report(report, format, out);
  finish_output(out, path);
}

}  // namespace nlflp
