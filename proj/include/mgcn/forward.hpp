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

#include "mgcn/graph.hpp"
#include "mgcn/model.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {

/// The node sets and aggregation operators one layer works on. Columns are
/// local: input column c holds node in_nodes[c], output column o holds node
/// out_nodes[o]. Every output node also appears among the inputs, at
/// self_index[o].
struct LayerPlan {
  std::vector<NodeId> in_nodes;
  std::vector<NodeId> out_nodes;
  std::vector<NodeId> self_index;
  // Per dimension: out_nodes.size() rows over in_nodes.size() columns.
  std::vector<SparseRows> aggregation;
  // True when in_nodes == out_nodes and self_index is the identity.
  bool identity_self = false;
};

/// K layer plans; layer k's outputs are layer k+1's inputs.
struct ForwardPlan {
  std::vector<LayerPlan> layers;

  const std::vector<NodeId>& input_nodes() const { return layers.front().in_nodes; }
  const std::vector<NodeId>& output_nodes() const { return layers.back().out_nodes; }
  /// Every node touched by any layer.
  std::size_t involved_count() const { return layers.front().in_nodes.size(); }
};

/// All nodes at every layer, aggregating with the normalized adjacency.
ForwardPlan full_plan(const MultiDimGraph& graph, std::size_t num_layers);

/// Sampled neighborhood of `targets` (deduplicated, order kept). Working
/// backwards from the last layer, each output node draws its aggregation
/// row in every dimension (see sampled_row) and the input set grows to
/// cover the drawn nodes. Output nodes come first in each input set.
ForwardPlan sampled_plan(const MultiDimGraph& graph, std::span<const NodeId> targets,
                         std::size_t num_layers, std::size_t s, Rng& rng);

/// Intermediate values of one layer, kept for the backward pass.
struct LayerCache {
  RepMatrix input;                  // H^k over in_nodes
  std::vector<RepMatrix> pre_proj;  // W_d H^k
  std::vector<RepMatrix> proj;      // E_d
  std::vector<RepMatrix> self_proj; // E_d gathered at out_nodes
  Matrix attention;                 // b
  std::vector<RepMatrix> blended;   // H_d
  Matrix concat;                    // concat of H_d
  RepMatrix pre_out;                // W^k concat
  RepMatrix output;                 // H^{k+1}
};

struct ForwardCache {
  std::vector<LayerCache> layers;
};

/// mGCN forward pass. `x` holds one column per graph node; the plan selects
/// the columns it needs. Returns Z over plan.output_nodes(). Fills `cache`
/// when given.
RepMatrix forward(const ModelParams& model, const RepMatrix& x, const ForwardPlan& plan,
                  ForwardCache* cache = nullptr);

/// Full-graph forward over all nodes.
RepMatrix forward(const ModelParams& model, const RepMatrix& x, const MultiDimGraph& graph);

/// Sampled forward over all nodes.
RepMatrix forward_sampled(const ModelParams& model, const RepMatrix& x,
                          const MultiDimGraph& graph, std::size_t s, Rng& rng);

/// Single-dimension GCN layer stack, act(W^k A act(W_0^k H)), used for the
/// aggregated-graph baseline. Requires D == 1. Ignores alpha and attention.
RepMatrix gcn_forward(const ModelParams& model, const RepMatrix& x, const ForwardPlan& plan);

}  // namespace mgcn
