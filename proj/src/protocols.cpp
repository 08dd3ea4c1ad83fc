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

#include "mgcn/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "mgcn/errors.hpp"
#include "mgcn/metrics.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {
namespace {

std::vector<NodePair> random_non_links(const MultiDimGraph& original, DimId dim,
                                       std::size_t count, std::set<NodePair>& taken, Rng& rng) {
  const std::size_t n = original.num_nodes();
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::vector<NodePair> out;
  out.reserve(count);
  const std::size_t max_draws = 1000 * count + 1000;
  for (std::size_t draws = 0; out.size() < count; ++draws) {
    if (draws == max_draws) throw std::invalid_argument("graph too dense to sample non-linked pairs");
    NodeId i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (!original.directed() && i > j) std::swap(i, j);
    if (original.has_edge(dim, i, j) || taken.contains({i, j})) continue;
    taken.insert({i, j});
    out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd hadamard_features(const RepMatrix& zd, std::span<const NodePair> pairs) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(pairs.size()), zd.rows());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].first >= zd.cols() || pairs[k].second >= zd.cols()) {
      throw std::out_of_range("pair endpoint outside the representation");
    }
    out.row(static_cast<Eigen::Index>(k)) =
        zd.col(pairs[k].first).cwiseProduct(zd.col(pairs[k].second)).transpose();
  }
  return out;
}

LinkEvalResult link_prediction_eval(const MultiDimGraph& graph, DimId dim,
                                    const LinkEvalOptions& options) {
  Rng split_rng = derive_rng(options.seed, "splits", dim);
  Rng pair_rng = derive_rng(options.seed, "pairs", dim);

  LinkEvalResult result;
  result.split = split_links(graph, dim, options.removed_fraction, split_rng);
  const MultiDimGraph& train_graph = result.split.train_graph;

  RepMatrix zd;
  if (options.embedder) {
    zd = options.embedder(train_graph, dim);
  } else {
    TrainResult trained = train(train_graph, std::nullopt, options.train);
    zd = link_representation(trained.model, trained.embedding, dim);
  }
  if (static_cast<std::size_t>(zd.cols()) != graph.num_nodes()) {
    throw ShapeError("link representation needs one column per node");
  }

  std::set<NodePair> taken;
  const std::vector<NodePair> train_pos = train_graph.edges(dim);
  result.train_negatives = random_non_links(graph, dim, train_pos.size(), taken, pair_rng);
  result.test_negatives =
      random_non_links(graph, dim, result.split.test_positives.size(), taken, pair_rng);

  std::vector<NodePair> test_pairs = result.split.test_positives;
  test_pairs.insert(test_pairs.end(), result.test_negatives.begin(), result.test_negatives.end());
  std::vector<int> test_labels(test_pairs.size(), 0);
  std::fill_n(test_labels.begin(), result.split.test_positives.size(), 1);

  std::vector<double> scores(test_pairs.size());
  if (options.score_override) {
    for (std::size_t k = 0; k < test_pairs.size(); ++k) {
      scores[k] = options.score_override(test_pairs[k].first, test_pairs[k].second);
    }
  } else {
    std::vector<NodePair> train_pairs = train_pos;
    train_pairs.insert(train_pairs.end(), result.train_negatives.begin(),
                       result.train_negatives.end());
    std::vector<int> train_labels(train_pairs.size(), 0);
    std::fill_n(train_labels.begin(), train_pos.size(), 1);
    const auto clf = LogisticRegression::fit(hadamard_features(zd, train_pairs), train_labels,
                                             options.classifier);
    const Eigen::VectorXd s = clf.class_score(hadamard_features(zd, test_pairs), 1);
    for (std::size_t k = 0; k < scores.size(); ++k) scores[k] = s(static_cast<Eigen::Index>(k));
  }
  result.auc = auc(scores, test_labels);

  result.report.task = EvalTask::kLinkPrediction;
  const std::string d = std::to_string(dim);
  result.report.settings = {
      {"variant", std::string(to_string(options.train.variant))},
      {"eval_dim", d},
      {"removed_fraction", format_ratio(options.removed_fraction)},
      {"split_seed", std::to_string(options.seed)},
      {"train_seed", std::to_string(options.train.seed)},
      {"test_positives", std::to_string(result.split.test_positives.size())},
      {"train_positives", std::to_string(train_pos.size())},
      {"logreg", "l2=" + format_ratio(options.classifier.l2) +
                     " lr=" + format_ratio(options.classifier.learning_rate) +
                     " iters=" + std::to_string(options.classifier.iterations)},
  };
  result.report.rows.push_back({d, format_ratio(options.removed_fraction), "0", "auc", result.auc});
  return result;
}

EvalReport node_classification_eval(const RepMatrix& z, std::span<const int> labels,
                                    const NodeClassOptions& options) {
  if (static_cast<std::size_t>(z.cols()) != labels.size()) {
    throw ShapeError("node classification: one label per representation column required");
  }
  std::vector<NodeId> labeled;
  std::set<int> classes;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= 0) {
      labeled.push_back(static_cast<NodeId>(i));
      classes.insert(labels[i]);
    }
  }
  if (classes.size() < 2) throw std::invalid_argument("node classification needs >= 2 classes");
  if (options.splits == 0) throw std::invalid_argument("need at least one split");

  EvalReport report;
  report.task = EvalTask::kNodeClassification;
  report.settings = {
      {"seed", std::to_string(options.seed)},
      {"splits", std::to_string(options.splits)},
      {"labeled_nodes", std::to_string(labeled.size())},
      {"logreg", "l2=" + format_ratio(options.classifier.l2) +
                     " lr=" + format_ratio(options.classifier.learning_rate) +
                     " iters=" + std::to_string(options.classifier.iterations)},
  };

  const auto n = labeled.size();
  for (std::size_t r = 0; r < options.ratios.size(); ++r) {
    const double ratio = options.ratios[r];
    if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("training ratio must lie in (0, 1)");
    const auto train_count = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n))), 1, n - 1);
    const std::string ratio_str = format_ratio(ratio);
    F1Scores mean;
    for (std::size_t s = 0; s < options.splits; ++s) {
      Rng rng = derive_rng(options.seed, "node-split", r * options.splits + s);
      std::vector<NodeId> order = labeled;
      std::shuffle(order.begin(), order.end(), rng);

      auto take = [&](std::size_t begin, std::size_t end, Eigen::MatrixXd& x, std::vector<int>& y) {
        x.resize(static_cast<Eigen::Index>(end - begin), z.rows());
        y.clear();
        for (std::size_t k = begin; k < end; ++k) {
          x.row(static_cast<Eigen::Index>(k - begin)) = z.col(order[k]).transpose();
          y.push_back(labels[order[k]]);
        }
      };
      Eigen::MatrixXd x_train, x_test;
      std::vector<int> y_train, y_test;
      take(0, train_count, x_train, y_train);
      take(train_count, n, x_test, y_test);

      const auto clf = LogisticRegression::fit(x_train, y_train, options.classifier);
      const F1Scores f1 = f1_scores(clf.predict(x_test), y_test);
      const std::string split = std::to_string(s);
      report.rows.push_back({"all", ratio_str, split, "f1_macro", f1.macro});
      report.rows.push_back({"all", ratio_str, split, "f1_micro", f1.micro});
      mean.macro += f1.macro;
      mean.micro += f1.micro;
    }
    const double k = static_cast<double>(options.splits);
    report.rows.push_back({"all", ratio_str, "mean", "f1_macro", mean.macro / k});
    report.rows.push_back({"all", ratio_str, "mean", "f1_micro", mean.micro / k});
  }
  return report;
}

}  // namespace mgcn
