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

#include "mgcn/adam.hpp"

#include <cmath>
#include <vector>

#include "mgcn/errors.hpp"

namespace mgcn {
namespace {

std::vector<Matrix*> tensors(ModelWeights& w) {
  std::vector<Matrix*> out;
  for_each_tensor(w, [&out](const std::string&, Matrix& m) { out.push_back(&m); });
  return out;
}

}  // namespace

AdamState init_adam(const ModelWeights& params) {
  return AdamState{zeros_like(params), zeros_like(params), 0};
}

void adam_step(ModelWeights& params, const ModelWeights& grads, AdamState& state,
               const AdamConfig& config) {
  auto p = tensors(params);
  auto g = tensors(const_cast<ModelWeights&>(grads));
  auto m = tensors(state.first_moment);
  auto v = tensors(state.second_moment);
  if (g.size() != p.size() || m.size() != p.size() || v.size() != p.size()) {
    throw ShapeError("Adam: tensor count mismatch");
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double correct1 = 1.0 - std::pow(config.beta1, t);
  const double correct2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (g[k]->rows() != p[k]->rows() || g[k]->cols() != p[k]->cols() ||
        m[k]->rows() != p[k]->rows() || m[k]->cols() != p[k]->cols()) {
      throw ShapeError("Adam: tensor shape mismatch");
    }
    *m[k] = config.beta1 * *m[k] + (1.0 - config.beta1) * *g[k];
    *v[k] = config.beta2 * *v[k] + (1.0 - config.beta2) * g[k]->cwiseProduct(*g[k]);
    p[k]->array() -= config.learning_rate * (m[k]->array() / correct1) /
                     ((v[k]->array() / correct2).sqrt() + config.epsilon);
  }
}

}  // namespace mgcn
