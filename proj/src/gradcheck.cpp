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

#include "mgcn/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mgcn/gradients.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {
namespace {

constexpr double kRelativeFloor = 1e-6;

MultiDimGraph random_graph(std::size_t n, std::size_t dims, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<NodePair>> edges(dims);
  for (auto& list : edges) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (coin(rng)) list.emplace_back(i, j);
      }
    }
    // Every dimension gets at least one positive to score.
    if (list.empty()) list.emplace_back(0, 1);
  }
  return MultiDimGraph(n, edges);
}

}  // namespace

GradCheckResult gradient_check(const GradCheckConfig& config) {
  if (config.num_nodes < 2) throw std::invalid_argument("grad-check needs at least two nodes");
  if (config.layers == 0 || config.num_dims == 0) throw std::invalid_argument("grad-check needs K, D >= 1");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  const bool baseline = config.variant == Variant::kGcnBaseline;
  const std::size_t dims = baseline ? 1 : config.num_dims;
  const double alpha = baseline ? 0.0 : config.alpha;
  const AttentionMode mode =
      config.variant == Variant::kMgcnNoa ? AttentionMode::kUniform : AttentionMode::kBilinear;

  Rng graph_rng = derive_rng(config.seed, "graph");
  Rng weight_rng = derive_rng(config.seed, "weights");
  Rng feature_rng = derive_rng(config.seed, "features");
  Rng batch_rng = derive_rng(config.seed, "batches");

  const MultiDimGraph graph = random_graph(config.num_nodes, dims, config.edge_prob, graph_rng);
  ModelParams model = init_model(
      {.num_dims = dims, .num_layers = config.layers,
       .input_width = static_cast<Eigen::Index>(config.input_width),
       .dim_width = static_cast<Eigen::Index>(config.dim_width),
       .embed_width = static_cast<Eigen::Index>(config.embed_width)},
      alpha, config.activation, mode, weight_rng);
  // Perturb M away from the identity so its gradient is generic.
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (auto& layer : model.weights.layers) {
    for (Eigen::Index k = 0; k < layer.attn_bilinear.size(); ++k) layer.attn_bilinear.data()[k] += u(weight_rng);
  }
  RepMatrix x(static_cast<Eigen::Index>(config.input_width), static_cast<Eigen::Index>(config.num_nodes));
  std::uniform_real_distribution<double> feat(-1.0, 1.0);
  for (Eigen::Index k = 0; k < x.size(); ++k) x.data()[k] = feat(feature_rng);

  const std::vector<Triplet> positives = positive_triplets(graph);
  const Minibatch batch = build_minibatch(positives, graph, config.sample_size, config.layers,
                                          config.negatives, batch_rng);

  GradientResult analytic = compute_gradients(model, x, batch);
  if (config.corrupt) config.corrupt(analytic.grads);

  std::vector<Matrix*> params;
  std::vector<std::pair<std::string, const Matrix*>> grads;
  for_each_tensor(model.weights, [&](const std::string&, Matrix& m) { params.push_back(&m); });
  for_each_tensor(analytic.grads,
                  [&](const std::string& name, const Matrix& m) { grads.emplace_back(name, &m); });

  GradCheckResult result;
  for (std::size_t t = 0; t < params.size(); ++t) {
    Matrix& p = *params[t];
    double worst = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      const double keep = p.data()[k];
      p.data()[k] = keep + config.epsilon;
      const double up = batch_loss(model, x, batch, config.variant);
      p.data()[k] = keep - config.epsilon;
      const double down = batch_loss(model, x, batch, config.variant);
      p.data()[k] = keep;
      const double numeric = (up - down) / (2.0 * config.epsilon);
      const double a = grads[t].second->data()[k];
      worst = std::max(worst, std::abs(a - numeric) /
                                  std::max({std::abs(a), std::abs(numeric), kRelativeFloor}));
    }
    result.relative_error[grads[t].first] = worst;
    if (result.worst_tensor.empty() || worst > result.max_relative_error) {
      result.max_relative_error = worst;
      result.worst_tensor = grads[t].first;
    }
  }
  result.passed = result.max_relative_error <= config.tolerance;
  return result;
}

}  // namespace mgcn
