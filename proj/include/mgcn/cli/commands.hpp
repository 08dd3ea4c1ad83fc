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

#include <iosfwd>
#include <string>
#include <vector>

#include "mgcn/cli/config.hpp"
#include "mgcn/gradcheck.hpp"

namespace mgcn::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // runtime, I/O, failed check
inline constexpr int kExitUsage = 2;     // bad arguments or config

int cmd_train(const RunConfig& config, std::ostream& out);
int cmd_link_predict(const RunConfig& config, std::ostream& out);
int cmd_node_classify(const RunConfig& config, std::ostream& out);
int cmd_synth(const RunConfig& config, std::ostream& out);
int cmd_grad_check(const RunConfig& config, std::ostream& out,
                   const std::function<void(ModelWeights&)>& corrupt = {});

/// Full command-line entry point: parses flags, merges the config file,
/// dispatches, and maps exceptions to exit statuses.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgcn::cli
