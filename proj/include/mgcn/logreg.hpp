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
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mgcn {

struct LogRegConfig {
  double l2 = 1e-4;
  double learning_rate = 0.1;
  std::size_t iterations = 500;
};

/// One-vs-rest logistic regression on standardized features.
class LogisticRegression {
 public:
  /// Full-batch gradient descent from zero weights on the mean logistic
  /// loss plus (l2 / 2) |w|^2 per class; biases are not penalized.
  /// `features` holds one sample per row; labels are dense class ids.
  /// Throws std::invalid_argument with fewer than two distinct classes.
  static LogisticRegression fit(const Eigen::MatrixXd& features, std::span<const int> labels,
                                const LogRegConfig& config = {});

  /// Per-class one-vs-rest probabilities, one row per sample, normalized
  /// to sum to one across classes.
  Eigen::MatrixXd predict_proba(const Eigen::MatrixXd& features) const;
  /// Unnormalized sigmoid output of the classifier for `cls`.
  Eigen::VectorXd class_score(const Eigen::MatrixXd& features, int cls) const;
  std::vector<int> predict(const Eigen::MatrixXd& features) const;

  std::size_t num_classes() const { return static_cast<std::size_t>(weights_.rows()); }
  /// Class-by-feature weights in standardized feature space.
  const Eigen::MatrixXd& weights() const { return weights_; }
  const Eigen::VectorXd& bias() const { return bias_; }

 private:
  Eigen::MatrixXd standardize(const Eigen::MatrixXd& features) const;
  Eigen::MatrixXd logits(const Eigen::MatrixXd& features) const;

  Eigen::MatrixXd weights_;
  Eigen::VectorXd bias_;
  Eigen::RowVectorXd mean_;
  Eigen::RowVectorXd scale_;
};

}  // namespace mgcn
