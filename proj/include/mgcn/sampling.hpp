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
#include <string_view>
#include <vector>

#include "mgcn/forward.hpp"
#include "mgcn/graph.hpp"
#include "mgcn/rng.hpp"

namespace mgcn {

/// (i, j, d) with label 1 for an existing link and 0 for a sampled
/// non-link.
struct Triplet {
  NodeId i = 0;
  NodeId j = 0;
  DimId d = 0;
  int label = 1;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

enum class Variant { kMgcn, kMgcnNoa, kGcnBaseline };

std::string_view to_string(Variant v);
/// Accepts "mgcn", "mgcn-noa"/"mgcn_noa", "gcn"/"gcn_baseline".
Variant parse_variant(std::string_view s);

/// Positive triplets of every dimension. Undirected edges contribute both
/// orientations so each endpoint anchors negatives equally often.
std::vector<Triplet> positive_triplets(const MultiDimGraph& graph);

/// Upper bound on rejected draws per negative before any j != i is taken.
inline constexpr int kNegativeRejections = 100;

/// n negatives (i, j', d, 0) for a positive (i, j, d): j' uniform over nodes,
/// rejecting i and i's neighbors in d. After kNegativeRejections rejections
/// the next j' != i is accepted. Throws std::invalid_argument when N < 2.
std::vector<Triplet> sample_negatives(const MultiDimGraph& graph, const Triplet& positive,
                                      std::size_t n, Rng& rng);

/// Triplets plus the sampled forward plan over their endpoints. `local`
/// mirrors `triplets` with endpoints replaced by output columns of the plan.
struct Minibatch {
  std::vector<Triplet> triplets;
  std::vector<Triplet> local;
  ForwardPlan plan;
};

/// Appends n negatives per positive, then samples a K-layer plan whose
/// output columns are exactly the batch endpoints.
Minibatch build_minibatch(std::span<const Triplet> positives, const MultiDimGraph& graph,
                          std::size_t s, std::size_t num_layers, std::size_t n, Rng& rng);
/// Same, drawing negatives and neighbor samples from separate streams.
Minibatch build_minibatch(std::span<const Triplet> positives, const MultiDimGraph& graph,
                          std::size_t s, std::size_t num_layers, std::size_t n,
                          Rng& negative_rng, Rng& neighbor_rng);

/// Wraps given triplets and an existing plan (e.g. a full plan).
Minibatch make_minibatch(std::vector<Triplet> triplets, ForwardPlan plan);

}  // namespace mgcn
