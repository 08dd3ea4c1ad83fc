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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mgcn/rng.hpp"

namespace mgcn {

using Matrix = Eigen::MatrixXd;

/// Dense node representations, one column per node.
using RepMatrix = Eigen::MatrixXd;

enum class Activation { kRelu, kTanh, kSigmoid, kIdentity };
enum class AttentionMode { kBilinear, kUniform };

std::string_view to_string(Activation a);
std::string_view to_string(AttentionMode m);
Activation parse_activation(std::string_view s);
AttentionMode parse_attention_mode(std::string_view s);

/// One mGCN layer: per-dimension projections (q x l), the combination
/// matrix (l' x D*q) and the bilinear attention matrix (q x q).
struct LayerParams {
  std::vector<Matrix> proj;
  Matrix combine;
  Matrix attn_bilinear;

  std::size_t num_dims() const { return proj.size(); }
  Eigen::Index in_width() const { return proj.front().cols(); }
  Eigen::Index dim_width() const { return proj.front().rows(); }
  Eigen::Index out_width() const { return combine.rows(); }
};

/// Every trainable tensor of the model. Also the shape of a gradient.
struct ModelWeights {
  std::vector<LayerParams> layers;
  // Square link-scoring projections, one per dimension.
  std::vector<Matrix> output_proj;
};

struct ModelParams {
  ModelWeights weights;
  double alpha = 0.5;
  Activation activation = Activation::kRelu;
  AttentionMode attention_mode = AttentionMode::kBilinear;

  std::size_t num_layers() const { return weights.layers.size(); }
  std::size_t num_dims() const { return weights.output_proj.size(); }
  Eigen::Index input_width() const { return weights.layers.front().in_width(); }
  Eigen::Index embed_width() const { return weights.layers.back().out_width(); }

  /// Throws ShapeError or std::invalid_argument when the invariants break.
  void validate() const;
};

struct ModelShape {
  std::size_t num_dims = 1;
  std::size_t num_layers = 1;
  Eigen::Index input_width = 64;
  Eigen::Index dim_width = 64;
  Eigen::Index embed_width = 64;
};

/// Glorot-uniform weights, identity attention matrices.
ModelParams init_model(const ModelShape& shape, double alpha, Activation activation,
                       AttentionMode mode, Rng& rng);

ModelWeights zeros_like(const ModelWeights& w);

/// Visits every tensor with a stable name, e.g. "layer0.proj1",
/// "layer0.combine", "layer0.attn", "output_proj2".
void for_each_tensor(ModelWeights& w, const std::function<void(const std::string&, Matrix&)>& fn);
void for_each_tensor(const ModelWeights& w,
                     const std::function<void(const std::string&, const Matrix&)>& fn);

}  // namespace mgcn
