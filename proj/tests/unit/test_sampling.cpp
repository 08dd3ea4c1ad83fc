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

#include <cmath>
#include <set>

#include "doctest.h"
#include "mgcn/sampling.hpp"
#include "support/oracles.hpp"

using namespace mgcn;

TEST_CASE("negatives: only legal draw") {
  // Node 0 adjacent to everything except 3.
  MultiDimGraph g(5, {{{0, 1}, {0, 2}, {0, 4}}});
  Rng rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    auto neg = sample_negatives(g, {0, 1, 0, 1}, 1, rng);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0] == Triplet{0, 3, 0, 0});
  }
}

TEST_CASE("negatives: count, validity, determinism") {
  Rng rng(2);
  auto g = testing::random_graph(30, 2, 0.1, rng);
  Triplet pos{4, 0, 1, 1};
  auto neg = sample_negatives(g, pos, 2, rng);
  CHECK(neg.size() == 2);
  for (const auto& t : neg) {
    CHECK(t.i == 4);
    CHECK(t.d == 1);
    CHECK(t.label == 0);
    CHECK(t.j != 4);
    CHECK(!g.has_edge(1, 4, t.j));
  }
  Rng a(3), b(3);
  CHECK(sample_negatives(g, pos, 7, a) == sample_negatives(g, pos, 7, b));
}

TEST_CASE("negatives: saturated node falls back to any other node") {
  std::vector<NodePair> clique;
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = i + 1; j < 4; ++j) clique.emplace_back(i, j);
  MultiDimGraph g(4, {clique});
  Rng rng(4);
  auto neg = sample_negatives(g, {0, 1, 0, 1}, 5, rng);
  CHECK(neg.size() == 5);
  for (const auto& t : neg) CHECK(t.j != 0);
}

TEST_CASE("negatives need two nodes") {
  MultiDimGraph g(1, {{}});
  Rng rng(5);
  CHECK_THROWS_AS(sample_negatives(g, {0, 0, 0, 1}, 1, rng), std::invalid_argument);
}

TEST_CASE("positive triplets cover both orientations") {
  MultiDimGraph g(3, {{{0, 1}}, {{1, 2}}});
  auto p = positive_triplets(g);
  CHECK(p.size() == 4);
  std::set<std::tuple<NodeId, NodeId, DimId>> seen;
  for (auto t : p) {
    CHECK(t.label == 1);
    CHECK(g.has_edge(t.d, t.i, t.j));
    seen.emplace(t.i, t.j, t.d);
  }
  CHECK(seen.count({1, 0, 0}) == 1);
  CHECK(seen.count({2, 1, 1}) == 1);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("mgcn") == Variant::kMgcn);
  CHECK(parse_variant("mgcn_noa") == Variant::kMgcnNoa);
  CHECK(parse_variant("mgcn-noa") == Variant::kMgcnNoa);
  CHECK(parse_variant("gcn_baseline") == Variant::kGcnBaseline);
  CHECK(parse_variant(to_string(Variant::kGcnBaseline)) == Variant::kGcnBaseline);
  CHECK_THROWS_AS(parse_variant("deepwalk"), std::invalid_argument);
}

TEST_CASE("minibatch contents") {
  Rng rng(6);
  auto g = testing::random_graph(50, 3, 0.08, rng);
  auto positives = positive_triplets(g);
  REQUIRE(positives.size() > 4);
  std::vector<Triplet> first(positives.begin(), positives.begin() + 4);

  SUBCASE("endpoints and sampled pools are involved") {
    std::vector<Triplet> one(positives.begin(), positives.begin() + 1);
    auto batch = build_minibatch(one, g, 10, 1, 2, rng);
    CHECK(batch.triplets.size() == 3);
    std::set<NodeId> involved(batch.plan.input_nodes().begin(), batch.plan.input_nodes().end());
    CHECK(involved.count(one[0].i) == 1);
    CHECK(involved.count(one[0].j) == 1);
    // The pools here are smaller than s, so every neighbor in every dimension appears.
    for (DimId d = 0; d < g.num_dims(); ++d) {
      if (g.degree(d, one[0].i) + 1 <= 10) {
        for (NodeId v : g.neighbors(d, one[0].i)) CHECK(involved.count(v) == 1);
      }
    }
  }

  SUBCASE("local triplets index the plan outputs") {
    auto batch = build_minibatch(first, g, 3, 2, 2, rng);
    REQUIRE(batch.local.size() == batch.triplets.size());
    const auto& out = batch.plan.output_nodes();
    for (std::size_t t = 0; t < batch.local.size(); ++t) {
      CHECK(out[batch.local[t].i] == batch.triplets[t].i);
      CHECK(out[batch.local[t].j] == batch.triplets[t].j);
      CHECK(batch.local[t].label == batch.triplets[t].label);
    }
  }

  SUBCASE("size bound") {
    for (std::size_t k : {1u, 2u}) {
      const std::size_t s = 2;
      auto batch = build_minibatch(first, g, s, k, 2, rng);
      const std::size_t endpoints = batch.plan.output_nodes().size();
      const auto bound = endpoints * static_cast<std::size_t>(std::pow(1 + g.num_dims() * s, k));
      CHECK(batch.plan.involved_count() <= bound);
    }
  }

  SUBCASE("deterministic under a fixed seed") {
    Rng a(9), b(9);
    auto ba = build_minibatch(first, g, 3, 2, 2, a);
    auto bb = build_minibatch(first, g, 3, 2, 2, b);
    CHECK(ba.triplets == bb.triplets);
    CHECK(ba.plan.input_nodes() == bb.plan.input_nodes());
  }

  SUBCASE("empty positives are rejected") {
    CHECK_THROWS_AS(build_minibatch(std::span<const Triplet>(), g, 3, 1, 1, rng), std::invalid_argument);
  }
}

TEST_CASE("isolated endpoints involve only themselves") {
  MultiDimGraph g(6, {{{0, 1}}, {{0, 1}}});
  Rng rng(1);
  const std::vector<Triplet> pos = {{2, 3, 0, 1}};
  auto batch = build_minibatch(pos, g, 5, 2, 1, rng);
  std::set<NodeId> endpoints;
  for (const auto& t : batch.triplets) endpoints.insert({t.i, t.j});
  std::set<NodeId> involved(batch.plan.input_nodes().begin(), batch.plan.input_nodes().end());
  // Negatives may pull in 0 or 1, whose pools then join; everything else stays alone.
  for (NodeId v : involved) CHECK((endpoints.count(v) == 1 || v <= 1));
  std::vector<NodeId> targets = {2, 3};
  auto plan = sampled_plan(g, targets, 2, 5, rng);
  involved = std::set<NodeId>(plan.input_nodes().begin(), plan.input_nodes().end());
  CHECK(involved == std::set<NodeId>{2, 3});
}
