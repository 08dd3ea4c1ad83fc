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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mgcn/graph_io.hpp"
#include "mgcn/logreg.hpp"
#include "mgcn/synthetic.hpp"
#include "mgcn/trainer.hpp"

namespace mgcn::cli {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  // Master seed lives in train.seed; every command derives its streams from it.
  TrainConfig train;

  std::vector<std::string> dim_files;
  EdgeFormat edge_format = EdgeFormat::kPerDimension;
  bool directed = false;
  std::size_t num_nodes = 0;  // 0: infer from the edge files
  std::string labels;
  std::string features;  // optional X in the embedding text format
  std::string out = ".";

  std::vector<std::size_t> eval_dims;  // empty: every dimension
  std::vector<double> fractions{0.2};
  std::vector<Variant> variants;  // empty: just train.variant
  std::vector<double> ratios{0.1, 0.3, 0.5, 0.7, 0.9};
  std::size_t splits = 10;
  std::vector<double> alphas;  // empty: just train.alpha
  LogRegConfig logreg;

  SyntheticSpec synth;

  std::size_t gc_nodes = 6;
  std::size_t gc_dims = 2;
  std::size_t gc_width = 3;
  Activation gc_activation = Activation::kTanh;
  double gc_epsilon = 1e-5;
  double gc_tolerance = 1e-4;
};

/// Every key with its current value. Feeding this back through
/// config_from_json reproduces the same RunConfig.
nlohmann::json to_json(const RunConfig& config);

/// Applies `j` (a flat object) on top of `base`. Unknown keys and
/// ill-typed values throw ConfigError.
RunConfig apply_json(RunConfig base, const nlohmann::json& j);
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Converts a command-line value for `key`: path and name keys keep the raw
/// text; everything else is read as JSON, falling back to a bare string.
nlohmann::json parse_flag_value(const std::string& key, const std::string& text);

std::vector<std::string> config_keys();

}  // namespace mgcn::cli
