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

#include "doctest.h"
#include "mgcn/forward.hpp"
#include "mgcn/synthetic.hpp"
#include "mgcn/trainer.hpp"
#include "support/oracles.hpp"

using namespace mgcn;

namespace {

TrainConfig small_config() {
  TrainConfig c;
  c.embed_width = 8;
  c.batch_size = 64;
  c.epochs = 4;
  c.seed = 3;
  return c;
}

MultiDimGraph small_graph() {
  Rng rng(1);
  return generate_synthetic({.num_nodes = 60, .num_dims = 2, .intra_prob = 0.2, .inter_prob = 0.02}, rng);
}

}  // namespace

TEST_CASE("zero epochs returns the initial state") {
  auto g = small_graph();
  auto c = small_config();
  c.epochs = 0;
  auto r = train(g, std::nullopt, c);
  CHECK(r.epoch_losses.empty());
  CHECK(r.embedding == forward(r.model, r.features, g));
  CHECK(r.features.rows() == 8);
  CHECK(r.features.cols() == 60);
  CHECK(r.features.cwiseAbs().maxCoeff() <= 0.1);
}

TEST_CASE("loss decreases and the run is reproducible") {
  auto g = small_graph();
  auto c = small_config();
  c.epochs = 8;
  std::vector<double> seen;
  auto r1 = train(g, std::nullopt, c, [&](std::size_t, double l) { seen.push_back(l); });
  REQUIRE(r1.epoch_losses.size() == 8);
  CHECK(seen == r1.epoch_losses);
  CHECK(r1.epoch_losses.back() < r1.epoch_losses.front());
  auto r2 = train(g, std::nullopt, c);
  CHECK(r1.embedding == r2.embedding);
  CHECK(r1.epoch_losses == r2.epoch_losses);

  c.seed = 4;
  CHECK(train(g, std::nullopt, c).embedding != r1.embedding);
}

TEST_CASE("supplied features are used as-is") {
  auto g = small_graph();
  auto c = small_config();
  c.epochs = 1;
  Matrix x = Matrix::Random(5, 60);
  auto r = train(g, x, c);
  CHECK(r.features == x);
  CHECK(r.model.input_width() == 5);
  CHECK_THROWS_AS(train(g, Matrix::Random(5, 59), c), std::invalid_argument);
}

TEST_CASE("variants") {
  auto g = small_graph();
  auto c = small_config();
  c.epochs = 2;

  SUBCASE("gcn baseline trains a single-dimension model on the aggregated graph") {
    c.variant = Variant::kGcnBaseline;
    auto r = train(g, std::nullopt, c);
    CHECK(r.model.num_dims() == 1);
    CHECK(r.model.alpha == 0.0);
    CHECK(r.embedding == gcn_forward(r.model, r.features, full_plan(aggregate_dimensions(g), 1)));
    CHECK(link_representation(r.model, r.embedding, 1).rows() == 8);
  }

  SUBCASE("noa uses uniform attention") {
    c.variant = Variant::kMgcnNoa;
    auto r = train(g, std::nullopt, c);
    CHECK(r.model.attention_mode == AttentionMode::kUniform);
    CHECK(r.model.weights.layers[0].attn_bilinear == Matrix::Identity(8, 8));
  }
}

TEST_CASE("invalid configurations") {
  auto g = small_graph();
  auto c = small_config();
  for (auto mutate : std::vector<std::function<void(TrainConfig&)>>{
           [](TrainConfig& t) { t.negatives = 0; }, [](TrainConfig& t) { t.sample_size = 0; },
           [](TrainConfig& t) { t.layers = 0; }, [](TrainConfig& t) { t.alpha = 1.5; },
           [](TrainConfig& t) { t.batch_size = 0; }, [](TrainConfig& t) { t.embed_width = 0; }}) {
    auto bad = c;
    mutate(bad);
    CHECK_THROWS_AS(train(g, std::nullopt, bad), std::invalid_argument);
  }
  MultiDimGraph empty(5, {{}, {}});
  CHECK_THROWS_AS(train(empty, std::nullopt, c), std::invalid_argument);
}

TEST_CASE("link representation applies the per-dimension projection") {
  Rng rng(2);
  auto model = init_model({.num_dims = 2, .num_layers = 1, .input_width = 3, .dim_width = 3,
                           .embed_width = 3},
                          0.5, Activation::kRelu, AttentionMode::kBilinear, rng);
  Matrix z = Matrix::Random(3, 4);
  CHECK((link_representation(model, z, 1) - model.weights.output_proj[1] * z).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(link_representation(model, z, 2), std::out_of_range);
}
