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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "mgcn/graph.hpp"

namespace mgcn {

enum class EdgeFormat {
  kPerDimension,  // "src dst" per line, one file per dimension
  kTriples,       // "dim src dst" per line, single file
};

struct EdgeListOptions {
  EdgeFormat format = EdgeFormat::kPerDimension;
  bool directed = false;
  // Lower bound on N; the loaded N is max(this, 1 + max node id).
  std::optional<std::size_t> num_nodes;
  // Fixes D for the triples format; dimension ids >= D are then a range
  // error. Without it D = 1 + max dimension id.
  std::optional<std::size_t> num_dims;
};

/// Loads a graph from one file per dimension (dimension order = path order)
/// or from a single triples file. '#' lines and blank lines are skipped.
/// Throws IoError, ParseError (with line number) or std::out_of_range.
MultiDimGraph load_edge_lists(std::span<const std::string> paths, const EdgeListOptions& options);

/// Stream variants; `source` names the input in error messages.
MultiDimGraph read_per_dimension(std::span<std::istream* const> inputs,
                                 std::span<const std::string> sources,
                                 const EdgeListOptions& options);
MultiDimGraph read_triples(std::istream& in, const std::string& source,
                           const EdgeListOptions& options);

/// Attaches labels read from "node label" lines. Label strings are mapped to
/// dense class ids in order of first appearance. Nodes not listed stay
/// unlabeled (-1).
void load_labels(MultiDimGraph& graph, const std::string& path);
void read_labels(MultiDimGraph& graph, std::istream& in, const std::string& source);

/// Writes the triples format. A leading comment records N and D, which the
/// loader ignores; pass them back through EdgeListOptions to preserve
/// trailing isolated nodes and empty dimensions.
void write_triples(const MultiDimGraph& graph, std::ostream& out);
/// Writes the per-dimension format for one dimension.
void write_dimension(const MultiDimGraph& graph, DimId dim, std::ostream& out);
void write_labels(const MultiDimGraph& graph, std::ostream& out);

}  // namespace mgcn
