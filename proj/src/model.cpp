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

#include "mgcn/model.hpp"

#include <cmath>
#include <stdexcept>

#include "mgcn/errors.hpp"

namespace mgcn {

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::kRelu: return "relu";
    case Activation::kTanh: return "tanh";
    case Activation::kSigmoid: return "sigmoid";
    case Activation::kIdentity: return "identity";
  }
  return "?";
}

std::string_view to_string(AttentionMode m) {
  return m == AttentionMode::kBilinear ? "bilinear" : "uniform";
}

Activation parse_activation(std::string_view s) {
  if (s == "relu") return Activation::kRelu;
  if (s == "tanh") return Activation::kTanh;
  if (s == "sigmoid") return Activation::kSigmoid;
  if (s == "identity") return Activation::kIdentity;
  throw std::invalid_argument("unknown activation '" + std::string(s) + "'");
}

AttentionMode parse_attention_mode(std::string_view s) {
  if (s == "bilinear") return AttentionMode::kBilinear;
  if (s == "uniform") return AttentionMode::kUniform;
  throw std::invalid_argument("unknown attention mode '" + std::string(s) + "'");
}

void ModelParams::validate() const {
  if (weights.layers.empty()) throw std::invalid_argument("model needs at least one layer");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  const std::size_t d = num_dims();
  if (d == 0) throw ShapeError("model needs at least one dimension");
  Eigen::Index width = input_width();
  for (std::size_t k = 0; k < weights.layers.size(); ++k) {
    const LayerParams& layer = weights.layers[k];
    const std::string where = "layer " + std::to_string(k) + ": ";
    if (layer.num_dims() != d) throw ShapeError(where + "projection count != dimension count");
    const Eigen::Index q = layer.dim_width();
    for (const Matrix& w : layer.proj) {
      if (w.rows() != q || w.cols() != width) throw ShapeError(where + "projection shape mismatch");
    }
    if (layer.combine.cols() != static_cast<Eigen::Index>(d) * q) {
      throw ShapeError(where + "combination matrix must have D*q columns");
    }
    if (layer.attn_bilinear.rows() != q || layer.attn_bilinear.cols() != q) {
      throw ShapeError(where + "attention matrix must be q x q");
    }
    width = layer.combine.rows();
  }
  for (const Matrix& p : weights.output_proj) {
    if (p.rows() != width || p.cols() != width) {
      throw ShapeError("output projections must be square with the embedding width");
    }
  }
}

namespace {

Matrix glorot(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
  std::uniform_real_distribution<double> u(-bound, bound);
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = u(rng);
  }
  return m;
}

}  // namespace

ModelParams init_model(const ModelShape& shape, double alpha, Activation activation,
                       AttentionMode mode, Rng& rng) {
  if (shape.num_layers == 0) throw std::invalid_argument("num_layers must be >= 1");
  if (shape.num_dims == 0) throw std::invalid_argument("num_dims must be >= 1");
  ModelParams model;
  model.alpha = alpha;
  model.activation = activation;
  model.attention_mode = mode;
  Eigen::Index width = shape.input_width;
  const auto d = static_cast<Eigen::Index>(shape.num_dims);
  for (std::size_t k = 0; k < shape.num_layers; ++k) {
    LayerParams layer;
    for (std::size_t g = 0; g < shape.num_dims; ++g) {
      layer.proj.push_back(glorot(shape.dim_width, width, rng));
    }
    layer.combine = glorot(shape.embed_width, d * shape.dim_width, rng);
    layer.attn_bilinear = Matrix::Identity(shape.dim_width, shape.dim_width);
    model.weights.layers.push_back(std::move(layer));
    width = shape.embed_width;
  }
  for (std::size_t g = 0; g < shape.num_dims; ++g) {
    model.weights.output_proj.push_back(glorot(shape.embed_width, shape.embed_width, rng));
  }
  model.validate();
  return model;
}

ModelWeights zeros_like(const ModelWeights& w) {
  ModelWeights z = w;
  for_each_tensor(z, [](const std::string&, Matrix& m) { m.setZero(); });
  return z;
}

void for_each_tensor(ModelWeights& w, const std::function<void(const std::string&, Matrix&)>& fn) {
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    const std::string prefix = "layer" + std::to_string(k) + ".";
    LayerParams& layer = w.layers[k];
    for (std::size_t d = 0; d < layer.proj.size(); ++d) {
      fn(prefix + "proj" + std::to_string(d), layer.proj[d]);
    }
    fn(prefix + "combine", layer.combine);
    fn(prefix + "attn", layer.attn_bilinear);
  }
  for (std::size_t d = 0; d < w.output_proj.size(); ++d) {
    fn("output_proj" + std::to_string(d), w.output_proj[d]);
  }
}

void for_each_tensor(const ModelWeights& w,
                     const std::function<void(const std::string&, const Matrix&)>& fn) {
  for_each_tensor(const_cast<ModelWeights&>(w),
                  [&fn](const std::string& name, Matrix& m) { fn(name, m); });
}

}  // namespace mgcn
