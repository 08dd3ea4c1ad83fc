// Copyright 2026 The mgcn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgcn/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mgcn/checkpoint.hpp"
#include "mgcn/embedding_io.hpp"
#include "mgcn/errors.hpp"
#include "mgcn/protocols.hpp"
#include "mgcn/report.hpp"

namespace mgcn::cli {
namespace {

namespace fs = std::filesystem;

MultiDimGraph load_graph(const RunConfig& c) {
  if (c.dim_files.empty()) throw ConfigError("no input graph: pass --dim-files");
  EdgeListOptions opts;
  opts.format = c.edge_format;
  opts.directed = c.directed;
  if (c.num_nodes > 0) opts.num_nodes = c.num_nodes;
  MultiDimGraph g = load_edge_lists(c.dim_files, opts);
  if (!c.labels.empty()) load_labels(g, c.labels);
  return g;
}

std::optional<RepMatrix> load_features(const RunConfig& c, const MultiDimGraph& g) {
  if (c.features.empty()) return std::nullopt;
  RepMatrix x = load_embedding(c.features);
  if (static_cast<std::size_t>(x.cols()) != g.num_nodes()) {
    throw ShapeError("features cover " + std::to_string(x.cols()) + " nodes, graph has " +
                     std::to_string(g.num_nodes()));
  }
  return x;
}

fs::path prepare_out(const RunConfig& c) {
  fs::path dir(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + c.out + "': " + ec.message());
  return dir;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path.string() + "'");
  return f;
}

void write_config(const RunConfig& c, const fs::path& dir) {
  auto f = open_out(dir / "config.json");
  f << to_json(c).dump(2) << "\n";
}

std::vector<std::pair<std::string, std::string>> config_pairs(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  const nlohmann::json j = to_json(c);
  for (const auto& [k, v] : j.items()) out.emplace_back(k, v.dump());
  return out;
}

void print_mean_table(const EvalReport& report, const std::string& label, std::ostream& out) {
  out << std::left << std::setw(12) << label << std::setw(8) << "dim" << std::setw(8) << "ratio"
      << std::setw(10) << "metric" << "value\n";
  for (const ReportRow& r : report.rows) {
    if (r.split != "mean" && !(report.task == EvalTask::kLinkPrediction)) continue;
    out << std::setw(12) << "" << std::setw(8) << r.dim << std::setw(8) << r.ratio << std::setw(10)
        << r.metric << std::fixed << std::setprecision(4) << r.value << "\n";
    out.unsetf(std::ios::fixed);
  }
  out << std::right;
}

}  // namespace

int cmd_train(const RunConfig& c, std::ostream& out) {
  const MultiDimGraph graph = load_graph(c);
  const auto features = load_features(c, graph);
  const fs::path dir = prepare_out(c);
  write_config(c, dir);
  TrainResult r = train(graph, features, c.train, [&](std::size_t epoch, double loss) {
    out << "epoch " << epoch + 1 << " loss " << std::setprecision(10) << loss << "\n";
  });
  save_checkpoint({r.model, config_pairs(c)}, (dir / "model.ckpt").string());
  save_embedding(r.embedding, (dir / "embedding.txt").string());
  out << "wrote " << (dir / "model.ckpt").string() << " and " << (dir / "embedding.txt").string() << "\n";
  return kExitOk;
}

int cmd_link_predict(const RunConfig& c, std::ostream& out) {
  const MultiDimGraph graph = load_graph(c);
  std::vector<std::size_t> dims = c.eval_dims;
  if (dims.empty()) {
    for (std::size_t d = 0; d < graph.num_dims(); ++d) dims.push_back(d);
  }
  for (std::size_t d : dims) {
    if (d >= graph.num_dims()) {
      throw std::out_of_range("eval dimension " + std::to_string(d) + " out of range (D = " +
                              std::to_string(graph.num_dims()) + ")");
    }
  }
  std::vector<Variant> variants = c.variants;
  if (variants.empty()) variants.push_back(c.train.variant);
  const fs::path dir = prepare_out(c);
  write_config(c, dir);

  for (Variant v : variants) {
    EvalReport report;
    report.task = EvalTask::kLinkPrediction;
    for (std::size_t d : dims) {
      for (double fraction : c.fractions) {
        LinkEvalOptions opts;
        opts.removed_fraction = fraction;
        opts.train = c.train;
        opts.train.variant = v;
        opts.classifier = c.logreg;
        opts.seed = c.train.seed;
        report.append(link_prediction_eval(graph, static_cast<DimId>(d), opts).report);
      }
    }
    const std::string name = std::string(to_string(v));
    auto f = open_out(dir / ("link_prediction." + name + ".txt"));
    write_key_value(report, f);
    auto t = open_out(dir / ("link_prediction." + name + ".table"));
    write_table(report, t);
    print_mean_table(report, name, out);
  }
  return kExitOk;
}

int cmd_node_classify(const RunConfig& c, std::ostream& out) {
  if (c.labels.empty()) throw ConfigError("node-classify needs a labels file (--labels)");
  const MultiDimGraph graph = load_graph(c);
  const auto features = load_features(c, graph);
  std::vector<double> alphas = c.alphas;
  if (alphas.empty()) alphas.push_back(c.train.alpha);
  const fs::path dir = prepare_out(c);
  write_config(c, dir);

  for (double alpha : alphas) {
    TrainConfig tc = c.train;
    tc.alpha = alpha;
    const TrainResult r = train(graph, features, tc);
    EvalReport report = node_classification_eval(
        r.embedding, graph.labels(),
        {.ratios = c.ratios, .splits = c.splits, .classifier = c.logreg, .seed = c.train.seed});
    report.settings.insert(report.settings.begin(), {"alpha", format_ratio(alpha)});
    report.settings.insert(report.settings.begin(), {"variant", std::string(to_string(tc.variant))});
    const std::string tag = "alpha" + format_ratio(alpha);
    auto f = open_out(dir / ("node_classification." + tag + ".txt"));
    write_key_value(report, f);
    auto t = open_out(dir / ("node_classification." + tag + ".table"));
    write_table(report, t);
    print_mean_table(report, tag, out);
  }
  return kExitOk;
}

int cmd_synth(const RunConfig& c, std::ostream& out) {
  Rng rng = derive_rng(c.train.seed, "graph");
  const MultiDimGraph g = generate_synthetic(c.synth, rng);
  const fs::path dir = prepare_out(c);
  for (DimId d = 0; d < g.num_dims(); ++d) {
    const fs::path p = dir / ("dim" + std::to_string(d) + ".txt");
    auto f = open_out(p);
    write_dimension(g, d, f);
    out << "wrote " << p.string() << " (" << g.num_edges(d) << " edges)\n";
  }
  const fs::path p = dir / "labels.txt";
  auto f = open_out(p);
  write_labels(g, f);
  out << "wrote " << p.string() << "\n";
  return kExitOk;
}

int cmd_grad_check(const RunConfig& c, std::ostream& out,
                   const std::function<void(ModelWeights&)>& corrupt) {
  GradCheckConfig gc;
  gc.num_nodes = c.gc_nodes;
  gc.num_dims = c.gc_dims;
  gc.input_width = c.gc_width + 1;
  gc.dim_width = c.gc_width;
  gc.embed_width = c.gc_width;
  gc.layers = c.train.layers;
  gc.alpha = c.train.alpha;
  gc.activation = c.gc_activation;
  gc.variant = c.train.variant;
  gc.negatives = c.train.negatives;
  gc.sample_size = c.train.sample_size;
  gc.epsilon = c.gc_epsilon;
  gc.tolerance = c.gc_tolerance;
  gc.seed = c.train.seed;
  gc.corrupt = corrupt;
  const GradCheckResult r = gradient_check(gc);
  out << std::scientific << std::setprecision(3);
  for (const auto& [name, err] : r.relative_error) out << "tensor " << name << " max_rel_err " << err << "\n";
  out << "worst " << r.worst_tensor << " max_rel_err " << r.max_relative_error << " tolerance "
      << gc.tolerance << "\n";
  out.unsetf(std::ios::scientific);
  out << (r.passed ? "PASS" : "FAIL") << "\n";
  return r.passed ? kExitOk : kExitFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mgcn: multi-dimensional graph convolutional embeddings"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  // flag name -> (config key, collected values)
  std::map<std::string, std::pair<std::string, std::vector<std::string>>> flags;
  bool corrupt = false;
  bool print_config = false;

  auto add = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help,
                 bool multi = false) {
    auto& slot = flags[sub->get_name() + flag];
    slot.first = key;
    auto* opt = sub->add_option("--" + flag, slot.second, help);
    if (multi) {
      opt->delimiter(',')->expected(1, -1);
    } else {
      opt->expected(1);
    }
  };
  auto shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat JSON config file");
    sub->add_option("--set", sets, "override any config key: key=value")->expected(1, -1);
    sub->add_flag("--print-config", print_config, "print the effective config and exit");
    add(sub, "seed", "seed", "master seed");
    add(sub, "variant", "variant", "mgcn | mgcn-noa | gcn");
    add(sub, "alpha", "alpha", "across-dimension weight in [0,1]");
    add(sub, "neg", "negatives", "negatives per positive");
    add(sub, "sample", "sample_size", "sampled neighbors per node");
    add(sub, "layers", "layers", "number of layers K");
    add(sub, "dim-files", "dim_files", "edge files, one per dimension", true);
    add(sub, "labels", "labels", "node label file");
    add(sub, "out", "out", "output directory");
    add(sub, "epochs", "epochs", "training epochs");
    add(sub, "lr", "learning_rate", "Adam learning rate");
    add(sub, "embed", "embed_width", "embedding width");
    add(sub, "batch", "batch_size", "positives per minibatch");
    add(sub, "activation", "activation", "relu | tanh | sigmoid | identity");
    add(sub, "format", "edge_format", "per-dimension | triples");
    add(sub, "features", "features", "input features in embedding format");
    add(sub, "nodes", "num_nodes", "minimum node count");
    sub->add_flag_callback("--directed", [&flags, sub] { flags[sub->get_name() + "directed"] = {"directed", {"true"}}; },
                           "treat edges as directed");
  };

  auto* train_cmd = app.add_subcommand("train", "train a model, write checkpoint and embedding");
  auto* link_cmd = app.add_subcommand("link-predict", "link prediction evaluation");
  auto* node_cmd = app.add_subcommand("node-classify", "node classification evaluation");
  auto* synth_cmd = app.add_subcommand("synth", "generate a planted-partition graph");
  auto* grad_cmd = app.add_subcommand("grad-check", "finite-difference gradient check");
  for (auto* sub : {train_cmd, link_cmd, node_cmd, synth_cmd, grad_cmd}) shared(sub);

  add(link_cmd, "dims", "eval_dims", "dimensions to evaluate", true);
  add(link_cmd, "fractions", "fractions", "removed link fractions", true);
  add(link_cmd, "variants", "variants", "variant sweep", true);
  add(node_cmd, "ratios", "ratios", "training ratios", true);
  add(node_cmd, "splits", "splits", "random splits per ratio");
  add(node_cmd, "alphas", "alphas", "alpha sweep", true);
  add(synth_cmd, "synth-nodes", "synth_nodes", "number of nodes");
  add(synth_cmd, "synth-dims", "synth_dims", "number of dimensions");
  add(synth_cmd, "communities", "synth_communities", "number of communities");
  add(synth_cmd, "intra", "synth_intra", "intra-community edge probability");
  add(synth_cmd, "inter", "synth_inter", "inter-community edge probability");
  add(synth_cmd, "noise", "synth_noise", "per-dimension rewiring probability");
  add(grad_cmd, "gc-nodes", "gc_nodes", "nodes in the tiny model");
  add(grad_cmd, "gc-dims", "gc_dims", "dimensions in the tiny model");
  add(grad_cmd, "gc-width", "gc_width", "representation width");
  add(grad_cmd, "gc-activation", "gc_activation", "activation for the check");
  add(grad_cmd, "fd-epsilon", "gc_epsilon", "finite-difference step");
  add(grad_cmd, "tolerance", "gc_tolerance", "max relative error");
  grad_cmd->add_flag("--corrupt-gradient", corrupt, "test hook: perturb one analytic gradient entry")
      ->group("");

  std::vector<std::string> argv_storage = args;
  if (argv_storage.empty()) argv_storage.push_back("mgcn");
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    nlohmann::json overrides = nlohmann::json::object();
    for (const std::string& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
      const std::string key = s.substr(0, eq);
      overrides[key] = parse_flag_value(key, s.substr(eq + 1));
    }
    config = apply_json(config, overrides);
    overrides = nlohmann::json::object();
    for (const auto& [id, slot] : flags) {
      if (id.rfind(active->get_name(), 0) != 0 || slot.second.empty()) continue;
      const auto& [key, values] = slot;
      const nlohmann::json defaults = to_json(RunConfig{});
      if (defaults.at(key).is_array()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& v : values) list.push_back(parse_flag_value(key, v));
        overrides[key] = list;
      } else {
        overrides[key] = parse_flag_value(key, values.back());
      }
    }
    config = apply_json(config, overrides);
    config.train.validate();

    out << "config " << to_json(config).dump() << "\n";
    if (print_config) return kExitOk;

    const std::string name = active->get_name();
    if (name == "train") return cmd_train(config, out);
    if (name == "link-predict") return cmd_link_predict(config, out);
    if (name == "node-classify") return cmd_node_classify(config, out);
    if (name == "synth") return cmd_synth(config, out);
    if (name == "grad-check") {
      std::function<void(ModelWeights&)> hook;
      if (corrupt) hook = [](ModelWeights& g) { g.output_proj.front()(0, 0) += 1e-2; };
      return cmd_grad_check(config, out, hook);
    }
    err << "unknown command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::out_of_range& e) {
    err << "range error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace mgcn::cli
