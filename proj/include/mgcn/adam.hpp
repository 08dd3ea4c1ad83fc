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

#include <cstdint>

#include "mgcn/model.hpp"

namespace mgcn {

struct AdamConfig {
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  ModelWeights first_moment;
  ModelWeights second_moment;
  std::uint64_t step = 0;
};

/// Zeroed accumulators shaped like `params`.
AdamState init_adam(const ModelWeights& params);

/// One bias-corrected Adam update of every tensor in place.
void adam_step(ModelWeights& params, const ModelWeights& grads, AdamState& state,
               const AdamConfig& config);

}  // namespace mgcn
