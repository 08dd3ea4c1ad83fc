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

#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "mgcn/forward.hpp"
#include "mgcn/gradients.hpp"
#include "support/oracles.hpp"

using namespace mgcn;

namespace {

struct Case {
  std::size_t dims;
  std::size_t layers;
  double alpha;
  Activation act;
  AttentionMode mode;
  bool sampled;
};

std::string describe(const Case& c) {
  return "D=" + std::to_string(c.dims) + " K=" + std::to_string(c.layers) +
         " alpha=" + std::to_string(c.alpha) + " act=" + std::string(to_string(c.act)) +
         " mode=" + std::string(to_string(c.mode)) + (c.sampled ? " sampled" : " full");
}

// The tiny N=6, q=3 model with a batch drawn from a random graph.
struct Fixture {
  MultiDimGraph graph;
  ModelParams model;
  Matrix x;
  Minibatch batch;
};

Fixture make_fixture(const Case& c, std::uint64_t seed) {
  Rng rng(seed);
  Fixture f{testing::random_graph(6, c.dims, 0.5, rng), {}, {}, {}};
  f.model = init_model({.num_dims = c.dims, .num_layers = c.layers, .input_width = 4,
                        .dim_width = 3, .embed_width = 3},
                       c.alpha, c.act, c.mode, rng);
  for (auto& layer : f.model.weights.layers) layer.attn_bilinear += 0.5 * Matrix::Random(3, 3);
  f.x = Matrix::Random(4, 6);
  auto positives = positive_triplets(f.graph);
  if (positives.empty()) positives.push_back({0, 1, 0, 1});
  positives.resize(std::min<std::size_t>(positives.size(), 5));
  if (c.sampled) {
    f.batch = build_minibatch(positives, f.graph, 2, c.layers, 2, rng);
  } else {
    std::vector<Triplet> trip(positives);
    for (const auto& p : positives) {
      auto neg = sample_negatives(f.graph, p, 2, rng);
      trip.insert(trip.end(), neg.begin(), neg.end());
    }
    f.batch = make_minibatch(std::move(trip), full_plan(f.graph, c.layers));
  }
  return f;
}

double worst(const std::map<std::string, double>& errs, std::string* name = nullptr) {
  double w = 0.0;
  for (const auto& [k, v] : errs) {
    if (v >= w) {
      w = v;
      if (name) *name = k;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("analytic gradients match central differences") {
  std::vector<Case> cases;
  for (std::size_t dims : {1u, 2u, 3u})
    for (std::size_t k : {1u, 2u})
      for (double alpha : {0.0, 0.5, 1.0})
        for (auto mode : {AttentionMode::kBilinear, AttentionMode::kUniform})
          for (bool sampled : {false, true})
            cases.push_back({dims, k, alpha, Activation::kTanh, mode, sampled});
  for (auto act : {Activation::kRelu, Activation::kSigmoid, Activation::kIdentity})
    cases.push_back({2, 2, 0.5, act, AttentionMode::kBilinear, false});

  std::uint64_t seed = 100;
  for (const Case& c : cases) {
    CAPTURE(describe(c));
    auto f = make_fixture(c, seed++);
    auto analytic = compute_gradients(f.model, f.x, f.batch);
    auto loss = [&](const ModelParams& m) { return batch_loss(m, f.x, f.batch, Variant::kMgcn); };
    CHECK(analytic.loss == doctest::Approx(loss(f.model)).epsilon(1e-12));
    auto numeric = testing::finite_difference(f.model, loss, 1e-5);
    std::string name;
    const double err = worst(testing::relative_errors(analytic.grads, numeric), &name);
    CAPTURE(name);
    CHECK(err <= 1e-4);
  }
}

TEST_CASE("gradients for the GCN path agree with its own forward") {
  Case c{1, 2, 0.0, Activation::kTanh, AttentionMode::kBilinear, true};
  auto f = make_fixture(c, 7);
  auto analytic = compute_gradients(f.model, f.x, f.batch);
  auto loss = [&](const ModelParams& m) { return batch_loss(m, f.x, f.batch, Variant::kGcnBaseline); };
  auto numeric = testing::finite_difference(f.model, loss, 1e-5);
  CHECK(worst(testing::relative_errors(analytic.grads, numeric)) <= 1e-4);
}

TEST_CASE("attention parameters get no gradient when attention is inert") {
  for (auto [alpha, mode] : {std::pair{0.5, AttentionMode::kUniform}, std::pair{0.0, AttentionMode::kBilinear}}) {
    auto f = make_fixture({3, 2, alpha, Activation::kTanh, mode, true}, 11);
    auto g = compute_gradients(f.model, f.x, f.batch);
    for (const auto& layer : g.grads.layers) CHECK(layer.attn_bilinear.isZero(0.0));
  }
}

TEST_CASE("duplicating the batch doubles every gradient") {
  auto f = make_fixture({2, 2, 0.5, Activation::kTanh, AttentionMode::kBilinear, true}, 12);
  auto once = compute_gradients(f.model, f.x, f.batch);
  auto trip = f.batch.triplets;
  trip.insert(trip.end(), f.batch.triplets.begin(), f.batch.triplets.end());
  auto twice = compute_gradients(f.model, f.x, make_minibatch(trip, f.batch.plan));
  CHECK(twice.loss == doctest::Approx(2 * once.loss).epsilon(1e-13));
  std::vector<const Matrix*> a, b;
  for_each_tensor(once.grads, [&](const std::string&, const Matrix& m) { a.push_back(&m); });
  for_each_tensor(twice.grads, [&](const std::string&, const Matrix& m) { b.push_back(&m); });
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK((*b[t] - 2.0 * *a[t]).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, a[t]->cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("loss is invariant to triplet order") {
  auto f = make_fixture({2, 1, 0.5, Activation::kRelu, AttentionMode::kBilinear, false}, 13);
  Matrix z = forward(f.model, f.x, f.batch.plan);
  auto local = f.batch.local;
  const double base = compute_loss(f.model, z, local);
  std::reverse(local.begin(), local.end());
  CHECK(compute_loss(f.model, z, local) == doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("loss examples") {
  ModelParams model;
  model.weights.output_proj = {Matrix::Identity(2, 2)};
  Matrix z(2, 3);
  z << 1, 0, 50,
       0, 1, 50;
  const std::vector<Triplet> one = {{0, 1, 0, 1}};
  CHECK(compute_loss(model, z, one) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(compute_loss(model, z, one) == doctest::Approx(0.6931).epsilon(1e-4));
  const std::vector<Triplet> two = {{0, 1, 0, 1}, {1, 0, 0, 0}};
  CHECK(compute_loss(model, z, two) == doctest::Approx(1.3863).epsilon(1e-4));

  double prev = 1e9;
  for (double s : {0.0, 1.0, 5.0, 10.0, 20.0}) {
    const double l = triplet_loss(s, 1);
    CHECK(l >= 0.0);
    CHECK(l < prev);
    prev = l;
  }
  CHECK(triplet_loss(40.0, 1) < 1e-11);
  CHECK(std::isfinite(triplet_loss(-1e6, 1)));
  CHECK(std::isfinite(triplet_loss(1e6, 0)));
}

TEST_CASE("saturated correct predictions give vanishing gradients") {
  auto f = make_fixture({2, 1, 0.5, Activation::kTanh, AttentionMode::kBilinear, false}, 14);
  // Only the self-pair (i, i) positive with a huge output projection saturates.
  for (auto& p : f.model.weights.output_proj) p *= 1e3;
  std::vector<Triplet> self = {{0, 0, 0, 1}, {1, 1, 1, 1}};
  auto batch = make_minibatch(self, full_plan(f.graph, 1));
  auto g = compute_gradients(f.model, f.x, batch);
  CHECK(g.loss < 1e-10);
  for_each_tensor(g.grads, [](const std::string&, const Matrix& m) { CHECK(m.cwiseAbs().maxCoeff() < 1e-8); });
}
