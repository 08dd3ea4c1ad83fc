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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mgcn {

enum class EvalTask { kLinkPrediction, kNodeClassification };

/// One metric value. Fields double as the key-value file columns:
/// "task dim ratio split metric value".
struct ReportRow {
  std::string dim;     // evaluation dimension, or "all"
  std::string ratio;   // removal fraction or training ratio
  std::string split;   // split index, or "mean"
  std::string metric;  // auc, f1_macro, f1_micro
  double value = 0.0;
};

struct EvalReport {
  EvalTask task = EvalTask::kLinkPrediction;
  // Free-form settings recorded with the results: seeds, split descriptors,
  // classifier hyper-parameters.
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<ReportRow> rows;

  void append(const EvalReport& other);
  /// Value of the first row matching all given fields. Throws
  /// std::out_of_range when absent.
  double value(const std::string& dim, const std::string& ratio, const std::string& split,
               const std::string& metric) const;
};

std::string to_string(EvalTask task);
/// Compact decimal used in ratio columns, e.g. "0.5".
std::string format_ratio(double r);

/// One "task dim ratio split metric value" line per row, preceded by
/// "# key value" lines for the settings.
void write_key_value(const EvalReport& report, std::ostream& out);
/// Aligned human-readable table.
void write_table(const EvalReport& report, std::ostream& out);

}  // namespace mgcn
