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
#include <utility>
#include <vector>

#include "mgcn/model.hpp"

namespace mgcn {

/// Model tensors plus an echo of the configuration that produced them.
///
/// Text format, version 1:
///   mgcn-checkpoint 1
///   config <key> <value>          (zero or more)
///   model <layers K> <dims D> <alpha> <activation> <attention>
///   tensor <name> <rows> <cols>   (for_each_tensor order)
///   <rows lines of cols values, 17 significant digits>
///   end
struct Checkpoint {
  ModelParams model;
  std::vector<std::pair<std::string, std::string>> config;
};

void write_checkpoint(const Checkpoint& ckpt, std::ostream& out);
Checkpoint read_checkpoint(std::istream& in, const std::string& source);
void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace mgcn
