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

#include "mgcn/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "mgcn/forward.hpp"
#include "mgcn/layers.hpp"

namespace mgcn {
namespace {

constexpr double kScoreClamp = 30.0;

double signed_score(double score, int label) { return label == 1 ? score : -score; }

}  // namespace

double triplet_loss(double score, int label) {
  const double p = std::clamp(sigmoid(signed_score(score, label)), kProbFloor, 1.0 - kProbFloor);
  return -std::log(p);
}

double triplet_loss_grad(double score, int label) {
  const double t = signed_score(score, label);
  if (t > kScoreClamp || t < -kScoreClamp) return 0.0;
  const double p = sigmoid(t);
  if (p < kProbFloor || p > 1.0 - kProbFloor) return 0.0;
  const double sign = label == 1 ? 1.0 : -1.0;
  return -sign * (1.0 - p);
}

double compute_loss(const ModelParams& model, const RepMatrix& z, std::span<const Triplet> triplets) {
  double loss = 0.0;
  for (const Triplet& t : triplets) {
    loss += triplet_loss(link_score(z, t.i, t.j, t.d, model), t.label);
  }
  return loss;
}

GradientResult compute_gradients(const ModelParams& model, const RepMatrix& x,
                                 const Minibatch& batch) {
  ForwardCache cache;
  const RepMatrix z = forward(model, x, batch.plan, &cache);

  GradientResult result;
  result.grads = zeros_like(model.weights);
  ModelWeights& grads = result.grads;
  const std::size_t dims = model.num_dims();

  // Scores through Y_d = W_d^{K+1} Z.
  std::vector<RepMatrix> y(dims), dy(dims);
  std::vector<bool> used(dims, false);
  for (const Triplet& t : batch.local) used[t.d] = true;
  for (std::size_t d = 0; d < dims; ++d) {
    if (!used[d]) continue;
    y[d] = model.weights.output_proj[d] * z;
    dy[d] = RepMatrix::Zero(y[d].rows(), y[d].cols());
  }
  for (const Triplet& t : batch.local) {
    const double score = y[t.d].col(t.i).dot(y[t.d].col(t.j));
    result.loss += triplet_loss(score, t.label);
    const double g = triplet_loss_grad(score, t.label);
    if (g == 0.0) continue;
    dy[t.d].col(t.i) += g * y[t.d].col(t.j);
    dy[t.d].col(t.j) += g * y[t.d].col(t.i);
  }
  RepMatrix dz = RepMatrix::Zero(z.rows(), z.cols());
  for (std::size_t d = 0; d < dims; ++d) {
    if (!used[d]) continue;
    grads.output_proj[d].noalias() += dy[d] * z.transpose();
    dz.noalias() += model.weights.output_proj[d].transpose() * dy[d];
  }

  const double alpha = model.alpha;
  RepMatrix d_out = std::move(dz);
  for (std::size_t k = batch.plan.layers.size(); k-- > 0;) {
    const LayerParams& layer = model.weights.layers[k];
    const LayerPlan& lp = batch.plan.layers[k];
    const LayerCache& lc = cache.layers[k];
    LayerParams& g_layer = grads.layers[k];
    const Eigen::Index q = layer.dim_width();

    const Matrix d_pre_out =
        d_out.cwiseProduct(activation_grad(lc.pre_out, lc.output, model.activation));
    g_layer.combine.noalias() += d_pre_out * lc.concat.transpose();
    const Matrix d_concat = layer.combine.transpose() * d_pre_out;

    std::vector<RepMatrix> d_proj(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      d_proj[d] = RepMatrix::Zero(q, lc.input.cols());
      const auto d_blend = d_concat.middleRows(static_cast<Eigen::Index>(d) * q, q);
      const SparseRows& agg = lp.aggregation[d];
      const double within_scale = 1.0 - alpha;
      for (std::size_t o = 0; o < agg.num_rows(); ++o) {
        auto cols = agg.row_cols(o);
        auto w = agg.row_weights(o);
        for (std::size_t e = 0; e < cols.size(); ++e) {
          d_proj[d].col(cols[e]).noalias() +=
              (within_scale * w[e]) * d_blend.col(static_cast<Eigen::Index>(o));
        }
      }
    }

    if (alpha > 0.0) {
      const auto dd = static_cast<Eigen::Index>(dims);
      Matrix d_attn = Matrix::Zero(dd, dd);
      for (Eigen::Index g = 0; g < dd; ++g) {
        RepMatrix d_self = RepMatrix::Zero(q, lc.self_proj[g].cols());
        for (Eigen::Index t = 0; t < dd; ++t) {
          const auto d_across = alpha * d_concat.middleRows(t * q, q);
          d_self.noalias() += lc.attention(g, t) * d_across;
          d_attn(g, t) = d_across.cwiseProduct(lc.self_proj[g]).sum();
        }
        for (std::size_t o = 0; o < lp.self_index.size(); ++o) {
          d_proj[g].col(lp.self_index[o]) += d_self.col(static_cast<Eigen::Index>(o));
        }
      }
      if (model.attention_mode == AttentionMode::kBilinear) {
        // Softmax over g within each column t.
        Matrix d_score(dd, dd);
        for (Eigen::Index t = 0; t < dd; ++t) {
          const double mean = lc.attention.col(t).dot(d_attn.col(t));
          for (Eigen::Index g = 0; g < dd; ++g) {
            d_score(g, t) = lc.attention(g, t) * (d_attn(g, t) - mean);
          }
        }
        const Matrix& m = layer.attn_bilinear;
        for (Eigen::Index g = 0; g < dd; ++g) {
          for (Eigen::Index t = 0; t < dd; ++t) {
            const double s = d_score(g, t);
            if (s == 0.0) continue;
            g_layer.attn_bilinear.noalias() += s * layer.proj[g] * layer.proj[t].transpose();
            g_layer.proj[g].noalias() += s * m * layer.proj[t];
            g_layer.proj[t].noalias() += s * m.transpose() * layer.proj[g];
          }
        }
      }
    }

    RepMatrix d_in = RepMatrix::Zero(lc.input.rows(), lc.input.cols());
    for (std::size_t d = 0; d < dims; ++d) {
      const Matrix d_pre = d_proj[d].cwiseProduct(
          activation_grad(lc.pre_proj[d], lc.proj[d], model.activation));
      g_layer.proj[d].noalias() += d_pre * lc.input.transpose();
      if (k > 0) d_in.noalias() += layer.proj[d].transpose() * d_pre;
    }
    d_out = std::move(d_in);
  }
  return result;
}

double batch_loss(const ModelParams& model, const RepMatrix& x, const Minibatch& batch,
                  Variant variant) {
  const RepMatrix z = variant == Variant::kGcnBaseline ? gcn_forward(model, x, batch.plan)
                                                       : forward(model, x, batch.plan);
  return compute_loss(model, z, batch.local);
}

}  // namespace mgcn
