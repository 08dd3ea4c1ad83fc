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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mgcn/rng.hpp"

namespace mgcn {

using NodeId = std::uint32_t;
using DimId = std::uint32_t;
using NodePair = std::pair<NodeId, NodeId>;

/// Row-compressed sparse matrix with real weights. Used for the normalized
/// adjacency of one dimension and for the per-layer aggregation operators of
/// a forward plan.
struct SparseRows {
  std::size_t num_cols = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> cols;
  std::vector<double> weights;

  std::size_t num_rows() const { return offsets.size() - 1; }
  std::span<const NodeId> row_cols(std::size_t r) const {
    return {cols.data() + offsets[r], offsets[r + 1] - offsets[r]};
  }
  std::span<const double> row_weights(std::size_t r) const {
    return {weights.data() + offsets[r], offsets[r + 1] - offsets[r]};
  }
  /// Weight at (r, c), zero when absent.
  double at(std::size_t r, NodeId c) const;
};

/// Row-normalized adjacency with self-loops, D^-1 (A + I), of one dimension.
using NormalizedAdjacency = SparseRows;

/// N nodes shared by D edge sets. Each dimension is stored as a CSR of
/// sorted, duplicate-free neighbor lists. Undirected graphs store both
/// directions. Immutable after construction.
class MultiDimGraph {
 public:
  MultiDimGraph() = default;

  /// Builds from per-dimension edge lists. Self-loops are dropped,
  /// duplicates collapsed, and undirected edges symmetrized.
  /// Throws std::out_of_range for endpoints >= num_nodes and
  /// std::invalid_argument for zero dimensions.
  MultiDimGraph(std::size_t num_nodes, const std::vector<std::vector<NodePair>>& edges,
                bool directed = false);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_dims() const { return dims_.size(); }
  bool directed() const { return directed_; }

  std::span<const NodeId> neighbors(DimId dim, NodeId node) const;
  std::size_t degree(DimId dim, NodeId node) const { return neighbors(dim, node).size(); }
  bool has_edge(DimId dim, NodeId from, NodeId to) const;

  /// Canonical edge list of a dimension: (i, j) with i < j when undirected,
  /// every arc when directed. Sorted.
  std::vector<NodePair> edges(DimId dim) const;
  std::size_t num_edges(DimId dim) const;

  /// Dense class ids per node, -1 when unlabeled. Empty when the graph
  /// carries no labels.
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  bool has_labels() const { return !labels_.empty(); }
  std::size_t num_classes() const { return class_names_.size(); }
  void set_labels(std::vector<int> labels, std::vector<std::string> class_names);

 private:
  struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> targets;
  };

  void check_dim(DimId dim) const;

  std::size_t num_nodes_ = 0;
  bool directed_ = false;
  std::vector<Csr> dims_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
};

bool operator==(const MultiDimGraph& a, const MultiDimGraph& b);

/// Training graph and held-out positive links of one evaluation dimension.
struct LinkSplit {
  MultiDimGraph train_graph;
  DimId eval_dim = 0;
  std::vector<NodePair> test_positives;
  double removed_fraction = 0.0;
};

/// D^-1 (A_d + I): weight 1 / (deg(i) + 1) on each of i's neighbors and on i.
NormalizedAdjacency normalize_adjacency(const MultiDimGraph& graph, DimId dim);

/// The aggregation pool of a node: its sorted neighbors in `dim` plus itself.
std::vector<NodeId> neighbor_pool(const MultiDimGraph& graph, NodeId node, DimId dim);

/// Exactly `s` ids from neighbor_pool(node, dim). Draws without replacement
/// when the pool holds at least `s` members and with replacement otherwise.
std::vector<NodeId> sample_neighbors(const MultiDimGraph& graph, NodeId node, DimId dim,
                                     std::size_t s, Rng& rng);

/// Removes floor(fraction * |E_dim|) uniformly chosen edges of `dim`, and the
/// same node pairs from every other dimension where present.
LinkSplit split_links(const MultiDimGraph& graph, DimId dim, double fraction, Rng& rng);

/// Single-dimension graph whose edge set is the union over all dimensions.
MultiDimGraph aggregate_dimensions(const MultiDimGraph& graph);

}  // namespace mgcn
