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

#include "mgcn/graph.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {

struct SyntheticSpec {
  std::size_t num_nodes = 300;
  std::size_t num_dims = 3;
  std::size_t num_communities = 3;
  double intra_prob = 0.1;
  double inter_prob = 0.01;
  double dim_noise = 0.3;
};

/// Planted-partition multi-dimensional graph with community labels.
///
/// A base graph is drawn with edge probability intra_prob inside a community
/// and inter_prob across communities; community sizes differ by at most one
/// and membership is shuffled. Every dimension starts from the base edge set
/// and independently rewires each edge with probability dim_noise: one
/// endpoint is kept and the other is replaced by a fresh partner, drawn
/// inside the kept endpoint's community with the base graph's intra share of
/// that endpoint's expected degree. Dimensions stay correlated but distinct
/// while each keeps the base mixing pattern.
///
/// Throws std::invalid_argument unless 0 <= inter < intra <= 1,
/// dim_noise in [0, 1], and 1 <= num_communities <= num_nodes.
MultiDimGraph generate_synthetic(const SyntheticSpec& spec, Rng& rng);

}  // namespace mgcn
