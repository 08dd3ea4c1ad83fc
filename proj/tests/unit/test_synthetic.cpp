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

#include <map>
#include <stdexcept>

#include "doctest.h"
#include "mgcn/synthetic.hpp"

using namespace mgcn;

TEST_CASE("zero noise gives identical dimensions") {
  Rng rng(1);
  auto g = generate_synthetic({.num_nodes = 60, .num_dims = 3, .dim_noise = 0.0}, rng);
  CHECK(g.edges(0) == g.edges(1));
  CHECK(g.edges(1) == g.edges(2));
}

TEST_CASE("forced structure gives disjoint cliques matching labels") {
  Rng rng(2);
  auto g = generate_synthetic(
      {.num_nodes = 12, .num_dims = 2, .num_communities = 3, .intra_prob = 1.0,
       .inter_prob = 0.0, .dim_noise = 0.0},
      rng);
  const auto& lab = g.labels();
  for (NodeId i = 0; i < 12; ++i) {
    for (NodeId j = 0; j < 12; ++j) {
      if (i == j) continue;
      CHECK(g.has_edge(0, i, j) == (lab[i] == lab[j]));
    }
  }
  std::map<int, int> sizes;
  for (int l : lab) ++sizes[l];
  CHECK(sizes.size() == 3);
  for (auto [l, s] : sizes) CHECK(s == 4);
}

TEST_CASE("fixed seed regenerates the same graph") {
  SyntheticSpec spec;
  Rng a(99), b(99);
  CHECK(generate_synthetic(spec, a) == generate_synthetic(spec, b));
}

TEST_CASE("noise makes dimensions distinct but correlated") {
  Rng rng(3);
  auto g = generate_synthetic({}, rng);
  auto e0 = g.edges(0), e1 = g.edges(1);
  CHECK(e0 != e1);
  std::size_t shared = 0;
  for (auto e : e0) shared += g.has_edge(1, e.first, e.second) ? 1 : 0;
  CHECK(static_cast<double>(shared) / e0.size() > 0.3);
  // Mixing pattern survives rewiring: most edges stay inside communities.
  std::size_t intra = 0;
  for (auto [u, v] : e1) intra += g.labels()[u] == g.labels()[v] ? 1 : 0;
  CHECK(static_cast<double>(intra) / e1.size() > 0.7);
}

TEST_CASE("invalid probabilities are argument errors") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_synthetic({.intra_prob = 0.1, .inter_prob = 0.2}, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic({.intra_prob = 1.5}, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic({.inter_prob = -0.1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic({.dim_noise = 1.1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic({.num_nodes = 2, .num_communities = 3}, rng), std::invalid_argument);
}
