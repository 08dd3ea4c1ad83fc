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

#include "doctest.h"
#include "mgcn/metrics.hpp"
#include "mgcn/rng.hpp"
#include "support/oracles.hpp"

using namespace mgcn;

TEST_CASE("auc examples") {
  CHECK(auc(std::vector<double>{0.9, 0.1}, std::vector<int>{1, 0}) == 1.0);
  CHECK(auc(std::vector<double>{0.1, 0.9}, std::vector<int>{1, 0}) == 0.0);
  CHECK(auc(std::vector<double>{0.3, 0.3, 0.3, 0.3}, std::vector<int>{1, 0, 1, 0}) == 0.5);
  CHECK(auc(std::vector<double>{0.8, 0.6, 0.4}, std::vector<int>{1, 0, 1}) == 0.5);
}

TEST_CASE("auc errors") {
  CHECK_THROWS_AS(auc(std::vector<double>{0.1, 0.2}, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(auc(std::vector<double>{0.1}, std::vector<int>{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(auc(std::vector<double>{}, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("auc equals brute-force pair counting and ignores monotone transforms") {
  Rng rng(3);
  std::uniform_int_distribution<int> size(2, 400), level(0, 20), coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    std::vector<double> s(n);
    std::vector<int> y(n);
    for (int k = 0; k < n; ++k) {
      s[k] = level(rng) / 7.0;  // coarse levels force ties
      y[k] = coin(rng);
    }
    y[0] = 1;
    y[1] = 0;
    CHECK(auc(s, y) == testing::brute_force_auc(s, y));
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) t[k] = std::exp(3.0 * s[k]) - 4.0;
    CHECK(auc(t, y) == auc(s, y));
  }
}

TEST_CASE("f1 examples") {
  auto same = f1_scores(std::vector<int>{0, 1, 2, 1}, std::vector<int>{0, 1, 2, 1});
  CHECK(same.macro == 1.0);
  CHECK(same.micro == 1.0);

  auto half = f1_scores(std::vector<int>{0, 0, 0, 0}, std::vector<int>{0, 0, 1, 1});
  CHECK(half.micro == doctest::Approx(0.5));
  CHECK(half.macro == doctest::Approx(1.0 / 3.0));

  auto single = f1_scores(std::vector<int>{2}, std::vector<int>{2});
  CHECK(single.macro == 1.0);
  CHECK(single.micro == 1.0);

  CHECK_THROWS_AS(f1_scores(std::vector<int>{}, std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(f1_scores(std::vector<int>{1}, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("f1 micro equals accuracy") {
  Rng rng(4);
  std::uniform_int_distribution<int> cls(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> p(50), t(50);
    int hits = 0;
    for (int k = 0; k < 50; ++k) {
      p[k] = cls(rng);
      t[k] = cls(rng);
      hits += p[k] == t[k];
    }
    auto f = f1_scores(p, t);
    CHECK(f.micro == doctest::Approx(hits / 50.0).epsilon(1e-15));
    CHECK(f.macro >= 0.0);
    CHECK(f.macro <= 1.0);
  }
}
