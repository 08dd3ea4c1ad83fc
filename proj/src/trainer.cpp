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

#include "mgcn/trainer.hpp"

#include <algorithm>
#include <stdexcept>

#include "mgcn/forward.hpp"
#include "mgcn/gradients.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {

void TrainConfig::validate() const {
  if (embed_width == 0) throw std::invalid_argument("embed_width must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (negatives == 0) throw std::invalid_argument("negatives must be >= 1");
  if (sample_size == 0) throw std::invalid_argument("sample_size must be >= 1");
  if (layers == 0) throw std::invalid_argument("layers must be >= 1");
  if (batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
  if (!(adam.learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0 && adam.beta2 >= 0.0 && adam.beta2 < 1.0)) {
    throw std::invalid_argument("Adam betas must lie in [0, 1)");
  }
  if (!(adam.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

RepMatrix random_features(std::size_t width, std::size_t num_nodes, Rng& rng) {
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  RepMatrix x(static_cast<Eigen::Index>(width), static_cast<Eigen::Index>(num_nodes));
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index r = 0; r < x.rows(); ++r) x(r, c) = u(rng);
  }
  return x;
}

RepMatrix infer(const ModelParams& model, const RepMatrix& features, const MultiDimGraph& graph,
                Variant variant) {
  const ForwardPlan plan = full_plan(graph, model.num_layers());
  return variant == Variant::kGcnBaseline ? gcn_forward(model, features, plan)
                                          : forward(model, features, plan);
}

RepMatrix link_representation(const ModelParams& model, const RepMatrix& z, DimId dim) {
  const auto& proj = model.weights.output_proj;
  return proj.size() == 1 ? proj.front() * z : proj.at(dim) * z;
}

TrainResult train(const MultiDimGraph& input_graph, const std::optional<RepMatrix>& features,
                  const TrainConfig& config, const EpochCallback& on_epoch) {
  config.validate();
  const bool baseline = config.variant == Variant::kGcnBaseline;
  const MultiDimGraph aggregated = baseline ? aggregate_dimensions(input_graph) : MultiDimGraph{};
  const MultiDimGraph& graph = baseline ? aggregated : input_graph;

  std::vector<Triplet> positives = positive_triplets(graph);
  if (positives.empty()) throw std::invalid_argument("cannot train on a graph without edges");

  TrainResult result;
  result.variant = config.variant;
  if (features) {
    if (static_cast<std::size_t>(features->cols()) != graph.num_nodes()) {
      throw std::invalid_argument("feature matrix needs one column per node");
    }
    result.features = *features;
  } else {
    Rng feature_rng = derive_rng(config.seed, "features");
    result.features =
        random_features(config.effective_input_width(), graph.num_nodes(), feature_rng);
  }

  ModelShape shape;
  shape.num_dims = graph.num_dims();
  shape.num_layers = config.layers;
  shape.input_width = result.features.rows();
  shape.dim_width = static_cast<Eigen::Index>(config.effective_dim_width());
  shape.embed_width = static_cast<Eigen::Index>(config.embed_width);
  Rng weight_rng = derive_rng(config.seed, "weights");
  result.model = init_model(shape, baseline ? 0.0 : config.alpha, config.activation,
                            config.variant == Variant::kMgcnNoa ? AttentionMode::kUniform
                                                                : AttentionMode::kBilinear,
                            weight_rng);

  Rng shuffle_rng = derive_rng(config.seed, "batches");
  Rng negative_rng = derive_rng(config.seed, "negatives");
  Rng neighbor_rng = derive_rng(config.seed, "neighbors");
  AdamState adam = init_adam(result.model.weights);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(positives.begin(), positives.end(), shuffle_rng);
    double total = 0.0;
    for (std::size_t start = 0; start < positives.size(); start += config.batch_size) {
      const std::size_t stop = std::min(positives.size(), start + config.batch_size);
      const std::span<const Triplet> chunk(positives.data() + start, stop - start);
      const Minibatch batch = build_minibatch(chunk, graph, config.sample_size, config.layers,
                                              config.negatives, negative_rng, neighbor_rng);
      GradientResult step = compute_gradients(result.model, result.features, batch);
      total += step.loss;
      adam_step(result.model.weights, step.grads, adam, config.adam);
    }
    const double mean = total / static_cast<double>(positives.size());
    result.epoch_losses.push_back(mean);
    if (on_epoch) on_epoch(epoch, mean);
  }

  result.embedding = infer(result.model, result.features, graph, config.variant);
  return result;
}

}  // namespace mgcn
