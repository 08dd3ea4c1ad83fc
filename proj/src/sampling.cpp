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

#include "mgcn/sampling.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mgcn {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kMgcn: return "mgcn";
    case Variant::kMgcnNoa: return "mgcn-noa";
    case Variant::kGcnBaseline: return "gcn";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "mgcn") return Variant::kMgcn;
  if (s == "mgcn-noa" || s == "mgcn_noa") return Variant::kMgcnNoa;
  if (s == "gcn" || s == "gcn_baseline" || s == "gcn-baseline") return Variant::kGcnBaseline;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

std::vector<Triplet> positive_triplets(const MultiDimGraph& graph) {
  std::vector<Triplet> out;
  for (DimId d = 0; d < graph.num_dims(); ++d) {
    for (auto [u, v] : graph.edges(d)) {
      out.push_back({u, v, d, 1});
      if (!graph.directed()) out.push_back({v, u, d, 1});
    }
  }
  return out;
}

std::vector<Triplet> sample_negatives(const MultiDimGraph& graph, const Triplet& positive,
                                      std::size_t n, Rng& rng) {
  if (graph.num_nodes() < 2) throw std::invalid_argument("negative sampling needs N >= 2");
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(graph.num_nodes() - 1));
  std::vector<Triplet> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    NodeId j = pick(rng);
    for (int rejected = 0;
         rejected < kNegativeRejections &&
         (j == positive.i || graph.has_edge(positive.d, positive.i, j));
         ++rejected) {
      j = pick(rng);
    }
    while (j == positive.i) j = pick(rng);
    out.push_back({positive.i, j, positive.d, 0});
  }
  return out;
}

Minibatch make_minibatch(std::vector<Triplet> triplets, ForwardPlan plan) {
  Minibatch batch;
  std::unordered_map<NodeId, NodeId> column;
  const auto& out = plan.output_nodes();
  for (std::size_t c = 0; c < out.size(); ++c) column.emplace(out[c], static_cast<NodeId>(c));
  batch.local.reserve(triplets.size());
  for (const Triplet& t : triplets) {
    auto ci = column.find(t.i);
    auto cj = column.find(t.j);
    if (ci == column.end() || cj == column.end()) {
      throw std::invalid_argument("triplet endpoint missing from the plan outputs");
    }
    batch.local.push_back({ci->second, cj->second, t.d, t.label});
  }
  batch.triplets = std::move(triplets);
  batch.plan = std::move(plan);
  return batch;
}

Minibatch build_minibatch(std::span<const Triplet> positives, const MultiDimGraph& graph,
                          std::size_t s, std::size_t num_layers, std::size_t n,
                          Rng& negative_rng, Rng& neighbor_rng) {
  if (positives.empty()) throw std::invalid_argument("minibatch needs at least one positive");
  std::vector<Triplet> triplets(positives.begin(), positives.end());
  for (const Triplet& p : positives) {
    auto neg = sample_negatives(graph, p, n, negative_rng);
    triplets.insert(triplets.end(), neg.begin(), neg.end());
  }
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * triplets.size());
  for (const Triplet& t : triplets) {
    endpoints.push_back(t.i);
    endpoints.push_back(t.j);
  }
  ForwardPlan plan = sampled_plan(graph, endpoints, num_layers, s, neighbor_rng);
  return make_minibatch(std::move(triplets), std::move(plan));
}

Minibatch build_minibatch(std::span<const Triplet> positives, const MultiDimGraph& graph,
                          std::size_t s, std::size_t num_layers, std::size_t n, Rng& rng) {
  return build_minibatch(positives, graph, s, num_layers, n, rng, rng);
}

}  // namespace mgcn
