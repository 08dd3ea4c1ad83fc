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

#include "mgcn/model.hpp"

namespace mgcn {

/// Text export: a "N width" header, then "node v_1 ... v_width" per node in
/// column order, values printed with 17 significant digits.
void write_embedding(const RepMatrix& z, std::ostream& out);
void save_embedding(const RepMatrix& z, const std::string& path);

/// Inverse of write_embedding. Rows may come in any order.
RepMatrix read_embedding(std::istream& in, const std::string& source);
RepMatrix load_embedding(const std::string& path);

}  // namespace mgcn
