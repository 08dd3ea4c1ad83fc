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

#include "mgcn/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgcn/errors.hpp"

namespace mgcn {
namespace {

Eigen::MatrixXd logistic(const Eigen::MatrixXd& x) {
  return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-std::clamp(v, -30.0, 30.0))); });
}

}  // namespace

LogisticRegression LogisticRegression::fit(const Eigen::MatrixXd& features,
                                           std::span<const int> labels,
                                           const LogRegConfig& config) {
  const Eigen::Index n = features.rows();
  if (static_cast<std::size_t>(n) != labels.size()) {
    throw ShapeError("logistic regression: one label per feature row required");
  }
  if (n == 0) throw std::invalid_argument("logistic regression: no samples");
  if (!features.allFinite()) throw std::invalid_argument("logistic regression: non-finite features");
  int max_label = -1;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("logistic regression: negative class id");
    max_label = std::max(max_label, l);
  }
  const Eigen::Index classes = max_label + 1;
  if (std::count(labels.begin(), labels.end(), labels.front()) == n) {
    throw std::invalid_argument("logistic regression needs at least two classes");
  }

  LogisticRegression model;
  model.mean_ = features.colwise().mean();
  const Eigen::MatrixXd centered = features.rowwise() - model.mean_;
  model.scale_ = (centered.array().square().colwise().sum() / static_cast<double>(n)).sqrt().matrix();
  for (Eigen::Index f = 0; f < model.scale_.size(); ++f) {
    if (!(model.scale_(f) > 1e-12)) model.scale_(f) = 1.0;
  }
  const Eigen::MatrixXd x = model.standardize(features);

  Eigen::MatrixXd targets = Eigen::MatrixXd::Zero(n, classes);
  for (Eigen::Index r = 0; r < n; ++r) targets(r, labels[r]) = 1.0;

  model.weights_ = Eigen::MatrixXd::Zero(classes, features.cols());
  model.bias_ = Eigen::VectorXd::Zero(classes);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t it = 0; it < config.iterations; ++it) {
    const Eigen::MatrixXd residual = logistic(model.logits(x)) - targets;  // n x C
    const Eigen::MatrixXd grad_w = inv_n * residual.transpose() * x + config.l2 * model.weights_;
    const Eigen::VectorXd grad_b = inv_n * residual.colwise().sum().transpose();
    model.weights_ -= config.learning_rate * grad_w;
    model.bias_ -= config.learning_rate * grad_b;
  }
  return model;
}

Eigen::MatrixXd LogisticRegression::standardize(const Eigen::MatrixXd& features) const {
  if (features.cols() != mean_.size()) throw ShapeError("logistic regression: feature width mismatch");
  return (features.rowwise() - mean_).array().rowwise() / scale_.array();
}

Eigen::MatrixXd LogisticRegression::logits(const Eigen::MatrixXd& x) const {
  return (x * weights_.transpose()).rowwise() + bias_.transpose();
}

Eigen::VectorXd LogisticRegression::class_score(const Eigen::MatrixXd& features, int cls) const {
  return logistic(logits(standardize(features))).col(cls);
}

Eigen::MatrixXd LogisticRegression::predict_proba(const Eigen::MatrixXd& features) const {
  Eigen::MatrixXd p = logistic(logits(standardize(features)));
  for (Eigen::Index r = 0; r < p.rows(); ++r) p.row(r) /= p.row(r).sum();
  return p;
}

std::vector<int> LogisticRegression::predict(const Eigen::MatrixXd& features) const {
  const Eigen::MatrixXd scores = logits(standardize(features));
  std::vector<int> out(static_cast<std::size_t>(scores.rows()));
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    Eigen::Index best = 0;
    scores.row(r).maxCoeff(&best);
    out[r] = static_cast<int>(best);
  }
  return out;
}

}  // namespace mgcn
