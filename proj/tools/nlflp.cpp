// Command-line front end: inspect, predict, evaluate, benchmark, generate.
//
// Exit codes: 0 success, 1 input/parse failure, 2 invalid configuration.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nlflp/evaluation.hpp"
#include "nlflp/interlayer.hpp"
#include "nlflp/io.hpp"
#include "nlflp/multiplex.hpp"
#include "nlflp/predictor.hpp"
#include "nlflp/similarity.hpp"

namespace {

using namespace nlflp;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      items.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  items.push_back(current);
  return items;
}

SimilarityIndex require_similarity(const std::string& name) {
  auto index = parse_similarity(name);
  if (!index) {
    throw std::invalid_argument("unknown similarity method '" + name +
                                "' (expected cn, jc, aa, lhn, or hdi)");
  }
  return *index;
}

OutputFormat require_format(const std::string& name) {
  auto format = parse_format(name);
  if (!format) {
    throw std::invalid_argument("unknown output format '" + name +
                                "' (expected csv or json)");
  }
  return *format;
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> weights;
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      double w = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      weights.push_back(w);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed behavior weight '" + item + "'");
    }
  }
  return weights;
}

std::string cell(double v) {
  if (std::isnan(v)) return "undefined";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

void print_matrix(const std::string& title, const LayerSimilarityReport& report,
                  const std::vector<double>& values) {
  std::cout << title << ":\n";
  std::cout << std::setw(10) << "";
  for (std::size_t j = 0; j < report.layer_count; ++j) {
    std::cout << std::setw(12) << ("layer " + std::to_string(j));
  }
  std::cout << '\n';
  for (std::size_t i = 0; i < report.layer_count; ++i) {
    std::cout << std::setw(10) << ("layer " + std::to_string(i));
    for (std::size_t j = 0; j < report.layer_count; ++j) {
      std::cout << std::setw(12) << cell(values[i * report.layer_count + j]);
    }
    std::cout << '\n';
  }
}

struct CommonOutput {
  std::string out_path;
  std::string format_name = "csv";
};

void add_output_options(CLI::App* cmd, CommonOutput& out) {
  cmd->add_option("-o,--out", out.out_path, "Write machine-readable results here");
  cmd->add_option("-f,--format", out.format_name, "Output format: csv or json")
      ->capture_default_str();
}

struct InspectOptions {
  std::string input;
  CommonOutput output;
};

int run_inspect(const InspectOptions& opt) {
  MultiplexNetwork net = load_multiplex_edgelist(opt.input);
  LayerSimilarityReport report = compute_layer_report(net);

  std::cout << "nodes: " << report.node_count << "\n";
  std::cout << "layers: " << report.layer_count << "\n\n";
  std::cout << std::setw(10) << "layer" << std::setw(10) << "name"
            << std::setw(10) << "edges" << std::setw(12) << "density" << '\n';
  for (std::size_t l = 0; l < report.layer_count; ++l) {
    std::cout << std::setw(10) << l << std::setw(10) << net.layer_names()[l]
              << std::setw(10) << report.edge_counts[l] << std::setw(12)
              << cell(report.densities[l]) << '\n';
  }
  std::cout << '\n';
  print_matrix("interlayer centrality similarity (s_cw)", report, report.s_cw);
  std::cout << '\n';
  print_matrix("neighbor overlap (aasn, row = reference layer)", report, report.aasn);
  std::cout << '\n';
  print_matrix("layer likelihood (row = target, column = predictor)", report,
               report.likelihood);

  if (!opt.output.out_path.empty()) {
    write_layer_report(report, require_format(opt.output.format_name),
                       opt.output.out_path);
    std::cout << "\nreport written to " << opt.output.out_path << '\n';
  }
  return 0;
}

struct PredictOptions {
  std::string input;
  int target = 0;
  std::string method = "cn";
  std::size_t top = 10;
  std::string behavior_weights;
  bool no_rho_damping = false;
  CommonOutput output;
};

int run_predict(const PredictOptions& opt) {
  if (opt.top < 1) {
    throw std::invalid_argument("top-k must be at least 1");
  }
  MultiplexNetwork net = load_multiplex_edgelist(opt.input);

  PredictionConfig config;
  config.target_layer = opt.target;
  config.base_method = require_similarity(opt.method);
  config.rho_damping = !opt.no_rho_damping;
  if (!opt.behavior_weights.empty()) {
    config.behavior_weights = parse_weights(opt.behavior_weights);
  }

  const PairSet& training = net.layer(opt.target).edge_set();
  PairSet candidates = net.universal_pairs().minus(training);
  RankedPrediction ranking = allocate_scores(net, config, training, candidates);
  if (opt.top > ranking.entries.size()) {
    throw std::invalid_argument("top-k exceeds the candidate pair count (" +
                                std::to_string(ranking.entries.size()) + ")");
  }
  ranking.entries.resize(opt.top);

  if (ranking.single_layer) {
    std::cout << "note: single-layer network, scores use the base weight only\n";
  }
  std::cout << std::setw(6) << "rank" << std::setw(12) << "u" << std::setw(12)
            << "v" << std::setw(16) << "score" << '\n';
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    const ScoredPair& e = ranking.entries[i];
    std::cout << std::setw(6) << i + 1 << std::setw(12) << net.label_of(e.pair.a)
              << std::setw(12) << net.label_of(e.pair.b) << std::setw(16)
              << cell(e.score) << '\n';
  }

  if (!opt.output.out_path.empty()) {
    write_ranking(ranking, require_format(opt.output.format_name),
                  opt.output.out_path, &net);
    std::cout << "ranking written to " << opt.output.out_path << '\n';
  }
  return 0;
}

struct EvalOptions {
  std::string input;
  int target = 0;
  std::string methods;  // empty = subcommand default
  std::size_t trials = 20;
  double holdout = 0.1;
  std::size_t split_count = 0;
  bool count_mode = false;
  std::uint64_t seed = 42;
  std::uint64_t auc_comparisons = 10000;
  std::string base_method = "cn";
  std::string behavior_weights;
  bool no_rho_damping = false;
  CommonOutput output;
};

void add_eval_options(CLI::App* cmd, EvalOptions& opt) {
  cmd->add_option("-i,--input", opt.input, "Multiplex edge-list file")->required();
  cmd->add_option("-t,--target", opt.target, "Target layer index")
      ->capture_default_str();
  cmd->add_option("--trials", opt.trials, "Number of repeated splits")
      ->capture_default_str();
  auto* holdout = cmd->add_option("--holdout", opt.holdout,
                                  "Held-out fraction of target edges")
                      ->capture_default_str();
  cmd->add_option("--split-count", opt.split_count,
                  "Hold out exactly this many edges instead of a fraction")
      ->excludes(holdout);
  cmd->add_option("-s,--seed", opt.seed, "Master random seed")->capture_default_str();
  cmd->add_option("--auc-comparisons", opt.auc_comparisons,
                  "Sampled comparisons per AUC estimate")
      ->capture_default_str();
  cmd->add_option("--base-method", opt.base_method,
                  "Similarity index under the cross-layer method")
      ->capture_default_str();
  cmd->add_option("--behavior-weights", opt.behavior_weights,
                  "Comma-separated per-layer edge weight multipliers");
  cmd->add_flag("--no-rho-damping", opt.no_rho_damping,
                "Disable halving of edge-count ratios above 1");
  add_output_options(cmd, opt.output);
}

int run_evaluation(const EvalOptions& opt, const std::string& default_methods) {
  std::vector<Method> methods;
  const std::string method_list =
      opt.methods.empty() ? default_methods : opt.methods;
  for (const std::string& name : split_list(method_list)) {
    auto method = parse_method(name);
    if (!method) {
      throw std::invalid_argument("unknown method '" + name +
                                  "' (expected nlflp, cn, jc, aa, lhn, or hdi)");
    }
    methods.push_back(*method);
  }

  MultiplexNetwork net = load_multiplex_edgelist(opt.input);

  PredictionConfig config;
  config.target_layer = opt.target;
  config.base_method = require_similarity(opt.base_method);
  config.rho_damping = !opt.no_rho_damping;
  if (!opt.behavior_weights.empty()) {
    config.behavior_weights = parse_weights(opt.behavior_weights);
  }

  SplitSpec split;
  split.trials = opt.trials;
  split.seed = opt.seed;
  if (opt.count_mode) {
    split.mode = SplitSpec::Mode::Count;
    split.holdout_count = opt.split_count;
  } else {
    split.mode = SplitSpec::Mode::Fraction;
    split.holdout_fraction = opt.holdout;
  }

  std::vector<EvaluationResult> results =
      run_benchmark(net, config, split, methods, opt.auc_comparisons);

  std::cout << std::setw(8) << "method" << std::setw(12) << "auc"
            << std::setw(12) << "auc sd" << std::setw(12) << "precision"
            << std::setw(12) << "prec sd" << '\n';
  for (const EvaluationResult& r : results) {
    std::cout << std::setw(8) << method_name(r.method) << std::setw(12)
              << cell(r.auc_mean) << std::setw(12) << cell(r.auc_std)
              << std::setw(12) << cell(r.precision_mean) << std::setw(12)
              << cell(r.precision_std) << '\n';
  }
  for (const EvaluationResult& r : results) {
    if (r.single_layer_warning) {
      std::cout << "note: " << method_name(r.method)
                << " ran on a single-layer network (base weight only)\n";
    }
  }

  if (!opt.output.out_path.empty()) {
    EvaluationContext context;
    context.input = opt.input;
    context.target_layer = opt.target;
    context.base_method = config.base_method;
    context.rho_damping = config.rho_damping;
    context.split = split;
    context.auc_comparisons = opt.auc_comparisons;
    write_evaluation(results, context, require_format(opt.output.format_name),
                     opt.output.out_path);
    std::cout << "results written to " << opt.output.out_path << '\n';
  }
  return 0;
}

struct GenerateOptions {
  std::string out_path;
  std::size_t nodes = 500;
  std::size_t layers = 3;
  double density = 0.02;
  double correlation = 0.8;
  double target_density = 0.0;
  bool has_target_density = false;
  std::uint64_t seed = 42;
};

int run_generate(const GenerateOptions& opt) {
  SyntheticSpec spec;
  spec.nodes = opt.nodes;
  spec.layers = opt.layers;
  spec.base_density = opt.density;
  spec.interlayer_correlation = opt.correlation;
  if (opt.has_target_density) spec.target_layer_density = opt.target_density;
  spec.seed = opt.seed;

  MultiplexNetwork net = generate_synthetic(spec);
  write_multiplex_edgelist(net, opt.out_path);

  std::cout << "wrote " << opt.out_path << ": " << net.node_count()
            << " nodes, " << net.layer_count() << " layers, edges per layer:";
  for (std::size_t l = 0; l < net.layer_count(); ++l) {
    std::cout << ' ' << net.layer(static_cast<int>(l)).edge_count();
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplex-network link prediction toolkit"};
  app.require_subcommand(1);

  InspectOptions inspect;
  CLI::App* cmd_inspect =
      app.add_subcommand("inspect", "Per-layer statistics and interlayer similarity");
  cmd_inspect->add_option("-i,--input", inspect.input, "Multiplex edge-list file")
      ->required();
  add_output_options(cmd_inspect, inspect.output);

  PredictOptions predict;
  CLI::App* cmd_predict =
      app.add_subcommand("predict", "Rank the most likely missing links of a layer");
  cmd_predict->add_option("-i,--input", predict.input, "Multiplex edge-list file")
      ->required();
  cmd_predict->add_option("-t,--target", predict.target, "Target layer index")
      ->capture_default_str();
  cmd_predict->add_option("-m,--method", predict.method, "Base similarity index")
      ->capture_default_str();
  cmd_predict->add_option("-k,--top", predict.top, "Number of pairs to report")
      ->capture_default_str();
  cmd_predict->add_option("--behavior-weights", predict.behavior_weights,
                          "Comma-separated per-layer edge weight multipliers");
  cmd_predict->add_flag("--no-rho-damping", predict.no_rho_damping,
                        "Disable halving of edge-count ratios above 1");
  add_output_options(cmd_predict, predict.output);

  EvalOptions evaluate;
  CLI::App* cmd_evaluate = app.add_subcommand(
      "evaluate", "Held-out evaluation of the cross-layer method");
  add_eval_options(cmd_evaluate, evaluate);
  cmd_evaluate->add_option("--methods", evaluate.methods,
                           "Comma-separated methods to evaluate (default nlflp)");

  EvalOptions benchmark;
  CLI::App* cmd_benchmark = app.add_subcommand(
      "benchmark", "Compare the cross-layer method against all baselines");
  add_eval_options(cmd_benchmark, benchmark);
  cmd_benchmark->add_option(
      "--methods", benchmark.methods,
      "Comma-separated methods to evaluate (default all six)");

  GenerateOptions generate;
  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Write a synthetic correlated multiplex network");
  cmd_generate->add_option("-o,--out", generate.out_path, "Output edge-list file")
      ->required();
  cmd_generate->add_option("-n,--nodes", generate.nodes, "Node count")
      ->capture_default_str();
  cmd_generate->add_option("-l,--layers", generate.layers, "Layer count")
      ->capture_default_str();
  cmd_generate->add_option("-d,--density", generate.density, "Edge density per layer")
      ->capture_default_str();
  cmd_generate->add_option("-r,--correlation", generate.correlation,
                           "Probability a layer-0 edge recurs in later layers")
      ->capture_default_str();
  CLI::Option* target_density_opt = cmd_generate->add_option(
      "--target-density", generate.target_density,
      "Override density of layer 0 (the prediction target)");
  cmd_generate->add_option("-s,--seed", generate.seed, "Random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  evaluate.count_mode = cmd_evaluate->count("--split-count") > 0;
  benchmark.count_mode = cmd_benchmark->count("--split-count") > 0;
  generate.has_target_density = target_density_opt->count() > 0;

  try {
    if (cmd_inspect->parsed()) return run_inspect(inspect);
    if (cmd_predict->parsed()) return run_predict(predict);
    if (cmd_evaluate->parsed()) return run_evaluation(evaluate, "nlflp");
    if (cmd_benchmark->parsed()) {
      return run_evaluation(benchmark, "nlflp,cn,jc,aa,lhn,hdi");
    }
    if (cmd_generate->parsed()) return run_generate(generate);
  } catch (const nlflp::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
