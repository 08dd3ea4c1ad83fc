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
#include <map>
#include <string>

#include "mgcn/model.hpp"
#include "mgcn/sampling.hpp"

namespace mgcn {

struct GradCheckConfig {
  std::size_t num_nodes = 6;
  std::size_t num_dims = 2;  // forced to 1 for the GCN variant
  std::size_t input_width = 4;
  std::size_t dim_width = 3;
  std::size_t embed_width = 3;
  std::size_t layers = 1;
  double alpha = 0.5;        // forced to 0 for the GCN variant
  // Smooth by default: relu's kink makes central differences unreliable
  // whenever a pre-activation lands within epsilon of zero.
  Activation activation = Activation::kTanh;
  Variant variant = Variant::kMgcn;
  double edge_prob = 0.5;
  std::size_t negatives = 2;
  std::size_t sample_size = 2;
  double epsilon = 1e-5;
  double tolerance = 1e-4;
  std::uint64_t seed = 1;
  // Test hook: mutates the analytic gradients before comparison.
  std::function<void(ModelWeights&)> corrupt;
};

struct GradCheckResult {
  std::map<std::string, double> relative_error;  // worst entry per tensor
  std::string worst_tensor;
  double max_relative_error = 0.0;
  bool passed = false;
};

/// Central finite differences against compute_gradients on a random tiny
/// model and a sampled minibatch. Relative error per entry is
/// |a - n| / max(|a|, |n|, 1e-6).
GradCheckResult gradient_check(const GradCheckConfig& config);

}  // namespace mgcn
