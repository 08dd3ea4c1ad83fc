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
#include <vector>

#include "mgcn/graph.hpp"
#include "mgcn/model.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {

/// Element-wise activation and its derivative, the latter expressed through
/// the pre-activation `x` and the activated value `y`.
Matrix activate(const Matrix& x, Activation a);
Matrix activation_grad(const Matrix& x, const Matrix& y, Activation a);

/// E_d = act(W_d H) for every dimension d.
std::vector<RepMatrix> project_to_dimensions(const RepMatrix& h, const LayerParams& layer,
                                             Activation activation);

/// Raw bilinear scores p(g, d) = tr(W_g^T M W_d).
Matrix attention_scores(const LayerParams& layer);

/// D x D matrix b with b(g, d) the weight of dimension g for target d.
/// Columns sum to one: a softmax over g in bilinear mode, 1/D in uniform mode.
Matrix attention_weights(const LayerParams& layer, AttentionMode mode);

/// Column o of the result is sum_j adj(o, j) * column j of `e`.
RepMatrix within_dim_aggregate(const RepMatrix& e, const SparseRows& adj);

/// Sampled variant over all nodes. Nodes whose pool (neighbors plus self)
/// holds at most `s` members aggregate over the whole pool with normalized
/// weights; larger pools are replaced by a uniform mean over `s` members
/// drawn without replacement.
RepMatrix within_dim_aggregate_sampled(const RepMatrix& e, const MultiDimGraph& graph, DimId dim,
                                       std::size_t s, Rng& rng);

/// Aggregation operator over the whole pool or an `s`-subsample of it, for
/// one node; the row of within_dim_aggregate_sampled.
void sampled_row(const MultiDimGraph& graph, NodeId node, DimId dim, std::size_t s, Rng& rng,
                 std::vector<NodeId>& cols, std::vector<double>& weights);

/// Ha_d = sum_g b(g, d) E_g, over all g including d.
std::vector<RepMatrix> across_dim_aggregate(const std::vector<RepMatrix>& e, const Matrix& b);

/// (1 - alpha) Hw + alpha Ha. Returns Hw or Ha verbatim at alpha 0 or 1.
RepMatrix blend(const RepMatrix& within, const RepMatrix& across, double alpha);

/// Vertical concatenation of the per-dimension blocks in dimension order.
Matrix concat_dimensions(const std::vector<RepMatrix>& h);

/// act(W concat(H_0 .. H_{D-1})).
RepMatrix combine_dimensions(const std::vector<RepMatrix>& h, const LayerParams& layer,
                             Activation activation);

/// Logistic function with the argument clamped to [-30, 30].
double sigmoid(double x);

/// Bilinear link score (W_d z_i)^T (W_d z_j) over columns of `z`.
double link_score(const RepMatrix& z, Eigen::Index i, Eigen::Index j, DimId d,
                  const ModelParams& model);

/// sigmoid(link_score).
double link_probability(const RepMatrix& z, Eigen::Index i, Eigen::Index j, DimId d,
                        const ModelParams& model);

}  // namespace mgcn
