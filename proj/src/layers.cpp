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

#include "mgcn/layers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgcn/errors.hpp"

namespace mgcn {

Matrix activate(const Matrix& x, Activation a) {
  switch (a) {
    case Activation::kRelu: return x.cwiseMax(0.0);
    case Activation::kTanh: return x.array().tanh().matrix();
    case Activation::kSigmoid: return x.unaryExpr([](double v) { return sigmoid(v); });
    case Activation::kIdentity: return x;
  }
  return x;
}

Matrix activation_grad(const Matrix& x, const Matrix& y, Activation a) {
  switch (a) {
    case Activation::kRelu:
      return x.unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; });
    case Activation::kTanh: return (1.0 - y.array().square()).matrix();
    case Activation::kSigmoid: return (y.array() * (1.0 - y.array())).matrix();
    case Activation::kIdentity: return Matrix::Ones(x.rows(), x.cols());
  }
  return Matrix::Ones(x.rows(), x.cols());
}

std::vector<RepMatrix> project_to_dimensions(const RepMatrix& h, const LayerParams& layer,
                                             Activation activation) {
  if (h.rows() != layer.in_width()) {
    throw ShapeError("representation width " + std::to_string(h.rows()) +
                     " != layer input width " + std::to_string(layer.in_width()));
  }
  std::vector<RepMatrix> out;
  out.reserve(layer.num_dims());
  for (const Matrix& w : layer.proj) out.push_back(activate(w * h, activation));
  return out;
}

Matrix attention_scores(const LayerParams& layer) {
  const auto d = static_cast<Eigen::Index>(layer.num_dims());
  Matrix p(d, d);
  for (Eigen::Index t = 0; t < d; ++t) {
    const Matrix mw = layer.attn_bilinear * layer.proj[t];
    // tr(W_g^T (M W_d)) is the Frobenius inner product of W_g and M W_d.
    for (Eigen::Index g = 0; g < d; ++g) p(g, t) = layer.proj[g].cwiseProduct(mw).sum();
  }
  return p;
}

Matrix attention_weights(const LayerParams& layer, AttentionMode mode) {
  const auto d = static_cast<Eigen::Index>(layer.num_dims());
  if (mode == AttentionMode::kUniform) {
    return Matrix::Constant(d, d, 1.0 / static_cast<double>(d));
  }
  Matrix b = attention_scores(layer);
  for (Eigen::Index t = 0; t < d; ++t) {
    const double top = b.col(t).maxCoeff();
    b.col(t) = (b.col(t).array() - top).exp().matrix();
    b.col(t) /= b.col(t).sum();
  }
  return b;
}

RepMatrix within_dim_aggregate(const RepMatrix& e, const SparseRows& adj) {
  if (static_cast<std::size_t>(e.cols()) != adj.num_cols) {
    throw ShapeError("aggregation expects " + std::to_string(adj.num_cols) + " columns, got " +
                     std::to_string(e.cols()));
  }
  RepMatrix out = RepMatrix::Zero(e.rows(), static_cast<Eigen::Index>(adj.num_rows()));
  for (std::size_t r = 0; r < adj.num_rows(); ++r) {
    auto cols = adj.row_cols(r);
    auto w = adj.row_weights(r);
    auto dst = out.col(static_cast<Eigen::Index>(r));
    for (std::size_t k = 0; k < cols.size(); ++k) dst.noalias() += w[k] * e.col(cols[k]);
  }
  return out;
}

void sampled_row(const MultiDimGraph& graph, NodeId node, DimId dim, std::size_t s, Rng& rng,
                 std::vector<NodeId>& cols, std::vector<double>& weights) {
  if (s == 0) throw std::invalid_argument("sample size must be >= 1");
  cols.clear();
  weights.clear();
  const std::size_t pool_size = graph.degree(dim, node) + 1;
  if (pool_size <= s) {
    cols = neighbor_pool(graph, node, dim);
    weights.assign(cols.size(), 1.0 / static_cast<double>(pool_size));
    return;
  }
  cols = sample_neighbors(graph, node, dim, s, rng);
  std::sort(cols.begin(), cols.end());
  weights.assign(cols.size(), 1.0 / static_cast<double>(s));
}

RepMatrix within_dim_aggregate_sampled(const RepMatrix& e, const MultiDimGraph& graph, DimId dim,
                                       std::size_t s, Rng& rng) {
  if (static_cast<std::size_t>(e.cols()) != graph.num_nodes()) {
    throw ShapeError("representation has " + std::to_string(e.cols()) + " columns for " +
                     std::to_string(graph.num_nodes()) + " nodes");
  }
  SparseRows rows;
  rows.num_cols = graph.num_nodes();
  std::vector<NodeId> cols;
  std::vector<double> weights;
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    sampled_row(graph, i, dim, s, rng, cols, weights);
    rows.cols.insert(rows.cols.end(), cols.begin(), cols.end());
    rows.weights.insert(rows.weights.end(), weights.begin(), weights.end());
    rows.offsets.push_back(rows.cols.size());
  }
  return within_dim_aggregate(e, rows);
}

std::vector<RepMatrix> across_dim_aggregate(const std::vector<RepMatrix>& e, const Matrix& b) {
  const auto d = static_cast<Eigen::Index>(e.size());
  if (b.rows() != d || b.cols() != d) throw ShapeError("attention matrix must be D x D");
  for (const RepMatrix& m : e) {
    if (m.rows() != e.front().rows() || m.cols() != e.front().cols()) {
      throw ShapeError("dimension-specific representations differ in shape");
    }
  }
  std::vector<RepMatrix> out;
  out.reserve(e.size());
  for (Eigen::Index t = 0; t < d; ++t) {
    RepMatrix acc = b(0, t) * e[0];
    for (Eigen::Index g = 1; g < d; ++g) acc.noalias() += b(g, t) * e[g];
    out.push_back(std::move(acc));
  }
  return out;
}

RepMatrix blend(const RepMatrix& within, const RepMatrix& across, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (within.rows() != across.rows() || within.cols() != across.cols()) {
    throw ShapeError("blend operands differ in shape");
  }
  if (alpha == 0.0) return within;
  if (alpha == 1.0) return across;
  return (1.0 - alpha) * within + alpha * across;
}

Matrix concat_dimensions(const std::vector<RepMatrix>& h) {
  const Eigen::Index q = h.front().rows();
  Matrix c(q * static_cast<Eigen::Index>(h.size()), h.front().cols());
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d].rows() != q || h[d].cols() != c.cols()) {
      throw ShapeError("dimension-specific representations differ in shape");
    }
    c.middleRows(static_cast<Eigen::Index>(d) * q, q) = h[d];
  }
  return c;
}

RepMatrix combine_dimensions(const std::vector<RepMatrix>& h, const LayerParams& layer,
                             Activation activation) {
  if (h.empty()) throw ShapeError("nothing to combine");
  if (layer.combine.cols() != h.front().rows() * static_cast<Eigen::Index>(h.size())) {
    throw ShapeError("combination matrix has " + std::to_string(layer.combine.cols()) +
                     " columns, concatenation has " +
                     std::to_string(h.front().rows() * static_cast<Eigen::Index>(h.size())));
  }
  if (h.size() == 1) return activate(layer.combine * h.front(), activation);
  return activate(layer.combine * concat_dimensions(h), activation);
}

double sigmoid(double x) {
  x = std::clamp(x, -30.0, 30.0);
  return 1.0 / (1.0 + std::exp(-x));
}

double link_score(const RepMatrix& z, Eigen::Index i, Eigen::Index j, DimId d,
                  const ModelParams& model) {
  const Matrix& w = model.weights.output_proj.at(d);
  return (w * z.col(i)).dot(w * z.col(j));
}

double link_probability(const RepMatrix& z, Eigen::Index i, Eigen::Index j, DimId d,
                        const ModelParams& model) {
  return sigmoid(link_score(z, i, j, d, model));
}

}  // namespace mgcn
