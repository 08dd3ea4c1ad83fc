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

#include <span>
#include <utility>

namespace mgcn {

/// Area under the ROC curve by the rank-sum statistic with midranks: the
/// probability that a random positive outscores a random negative, ties
/// counting one half. Throws std::invalid_argument unless both classes
/// are present and the spans have equal length.
double auc(std::span<const double> scores, std::span<const int> labels);

struct F1Scores {
  double macro = 0.0;
  double micro = 0.0;
};

/// Macro F1 averages per-class F1 over every class seen in `truth` or
/// `pred` (a class never predicted correctly scores 0). Micro F1 pools the
/// counts, which equals accuracy for single-label inputs.
F1Scores f1_scores(std::span<const int> pred, std::span<const int> truth);

}  // namespace mgcn
