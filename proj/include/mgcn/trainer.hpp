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
#include <optional>
#include <vector>

#include "mgcn/adam.hpp"
#include "mgcn/graph.hpp"
#include "mgcn/model.hpp"
#include "mgcn/sampling.hpp"

namespace mgcn {

struct TrainConfig {
  std::size_t embed_width = 64;
  // Width q of the dimension-specific representations; 0 means embed_width.
  std::size_t dim_width = 0;
  // Width of generated input features; 0 means embed_width. Ignored when
  // features are supplied.
  std::size_t input_width = 0;
  double alpha = 0.5;
  std::size_t negatives = 2;
  std::size_t sample_size = 10;
  std::size_t layers = 1;
  Activation activation = Activation::kRelu;
  AdamConfig adam{.learning_rate = 1e-3};
  std::size_t batch_size = 512;
  std::size_t epochs = 20;
  std::uint64_t seed = 1;
  Variant variant = Variant::kMgcn;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
  std::size_t effective_dim_width() const { return dim_width ? dim_width : embed_width; }
  std::size_t effective_input_width() const { return input_width ? input_width : embed_width; }
};

/// Uniform(-0.1, 0.1) features, one column per node.
RepMatrix random_features(std::size_t width, std::size_t num_nodes, Rng& rng);

struct TrainResult {
  ModelParams model;
  RepMatrix features;              // X
  RepMatrix embedding;             // Z from full aggregation
  std::vector<double> epoch_losses;  // mean loss per positive triplet
  Variant variant = Variant::kMgcn;
};

/// Called after every epoch with (epoch index, mean loss).
using EpochCallback = std::function<void(std::size_t, double)>;

/// Minibatch Adam on the negative-sampled link likelihood. Positives are
/// reshuffled each epoch and every batch draws fresh negatives and fresh
/// neighbor samples. The baseline variant trains a single-dimension model
/// on aggregate_dimensions(graph) with alpha 0. The returned embedding
/// uses full, unsampled aggregation. Deterministic for a fixed seed.
/// Throws std::invalid_argument for an edgeless graph or a bad config.
TrainResult train(const MultiDimGraph& graph, const std::optional<RepMatrix>& features,
                  const TrainConfig& config, const EpochCallback& on_epoch = {});

/// The model's inference path over the full graph it was trained on.
RepMatrix infer(const ModelParams& model, const RepMatrix& features, const MultiDimGraph& graph,
                Variant variant);

/// W_d^{K+1} Z, the link-scoring representation of dimension `dim`. The
/// baseline has a single projection, used for every dimension.
RepMatrix link_representation(const ModelParams& model, const RepMatrix& z, DimId dim);

}  // namespace mgcn
