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

#include <span>

#include "mgcn/model.hpp"
#include "mgcn/sampling.hpp"

namespace mgcn {

/// Probabilities are clamped into [kProbFloor, 1 - kProbFloor] before log.
inline constexpr double kProbFloor = 1e-12;

/// -log p(label | score) for one triplet and its derivative d/d score.
double triplet_loss(double score, int label);
double triplet_loss_grad(double score, int label);

/// Negative log-likelihood summed over triplets whose endpoints index
/// columns of `z`.
double compute_loss(const ModelParams& model, const RepMatrix& z, std::span<const Triplet> triplets);

struct GradientResult {
  double loss = 0.0;
  ModelWeights grads;
};

/// Loss of the minibatch and its exact gradient with respect to every model
/// tensor. The input `x` is constant. The backward pass follows the mGCN
/// forward; with alpha = 0 and D = 1 it is also the gradient of the GCN
/// path.
GradientResult compute_gradients(const ModelParams& model, const RepMatrix& x,
                                 const Minibatch& batch);

/// Minibatch loss through the forward path a variant uses: gcn_forward for
/// the baseline, forward otherwise.
double batch_loss(const ModelParams& model, const RepMatrix& x, const Minibatch& batch,
                  Variant variant);

}  // namespace mgcn
