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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mgcn/graph.hpp"
#include "mgcn/logreg.hpp"
#include "mgcn/model.hpp"
#include "mgcn/report.hpp"
#include "mgcn/trainer.hpp"

namespace mgcn {

/// One row per pair: the element-wise product of columns i and j of `zd`.
Eigen::MatrixXd hadamard_features(const RepMatrix& zd, std::span<const NodePair> pairs);

/// Produces the link representation (width x N) used to score pairs of
/// `dim` from the training graph only.
using LinkEmbedder = std::function<RepMatrix(const MultiDimGraph& train_graph, DimId dim)>;

/// Replaces classifier scores on the test pairs; a test hook.
using PairScorer = std::function<double(NodeId, NodeId)>;

struct LinkEvalOptions {
  double removed_fraction = 0.2;
  TrainConfig train;
  LogRegConfig classifier;
  // Drives the split and the random negative pairs.
  std::uint64_t seed = 1;
  // Default: train() on the split graph, then link_representation().
  LinkEmbedder embedder;
  PairScorer score_override;
};

struct LinkEvalResult {
  double auc = 0.0;
  LinkSplit split;
  std::vector<NodePair> train_negatives;
  std::vector<NodePair> test_negatives;
  EvalReport report;
};

/// Link prediction on one dimension: split_links, embed the training graph,
/// fit a logistic regression on Hadamard features of the remaining dim
/// edges against as many random non-linked pairs, then score the removed
/// edges against as many fresh random non-linked pairs. Negatives are
/// rejected against the original graph's edges in `dim`.
LinkEvalResult link_prediction_eval(const MultiDimGraph& graph, DimId dim,
                                    const LinkEvalOptions& options);

struct NodeClassOptions {
  std::vector<double> ratios{0.1, 0.3, 0.5, 0.7, 0.9};
  std::size_t splits = 10;
  LogRegConfig classifier;
  std::uint64_t seed = 1;
};

/// Node classification with Z columns as features. For every ratio, each
/// split shuffles the labeled nodes with its own generator and trains on
/// the first round(ratio * n) of them. Reports per-split and mean
/// F1-macro/F1-micro. Throws std::invalid_argument with fewer than two
/// classes among the labeled nodes.
EvalReport node_classification_eval(const RepMatrix& z, std::span<const int> labels,
                                    const NodeClassOptions& options);

}  // namespace mgcn
