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

#include "mgcn/synthetic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgcn {
namespace {

constexpr int kRewireAttempts = 32;

NodePair ordered(NodeId a, NodeId b) { return a < b ? NodePair{a, b} : NodePair{b, a}; }

}  // namespace

MultiDimGraph generate_synthetic(const SyntheticSpec& spec, Rng& rng) {
  if (!(spec.inter_prob >= 0.0 && spec.inter_prob < spec.intra_prob && spec.intra_prob <= 1.0)) {
    throw std::invalid_argument("need 0 <= inter_prob < intra_prob <= 1");
  }
  if (!(spec.dim_noise >= 0.0 && spec.dim_noise <= 1.0)) {
    throw std::invalid_argument("dim_noise must lie in [0, 1]");
  }
  if (spec.num_communities == 0 || spec.num_communities > spec.num_nodes) {
    throw std::invalid_argument("num_communities must lie in [1, num_nodes]");
  }
  if (spec.num_dims == 0) throw std::invalid_argument("num_dims must be >= 1");

  const std::size_t n = spec.num_nodes;
  const std::size_t c = spec.num_communities;
  std::vector<int> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<int>(i % c);
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<std::vector<NodeId>> members(c);
  for (std::size_t i = 0; i < n; ++i) members[label[i]].push_back(static_cast<NodeId>(i));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NodePair> base;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      double p = label[i] == label[j] ? spec.intra_prob : spec.inter_prob;
      if (unit(rng) < p) base.emplace_back(i, j);
    }
  }

  std::vector<std::vector<NodePair>> dims(spec.num_dims);
  for (auto& dim_edges : dims) {
    std::set<NodePair> present(base.begin(), base.end());
    std::vector<NodePair> out;
    out.reserve(base.size());
    for (NodePair e : base) {
      if (unit(rng) >= spec.dim_noise) {
        out.push_back(e);
        continue;
      }
      const NodeId keep = unit(rng) < 0.5 ? e.first : e.second;
      const auto& own = members[label[keep]];
      const double intra_mass = spec.intra_prob * static_cast<double>(own.size() - 1);
      const double inter_mass = spec.inter_prob * static_cast<double>(n - own.size());
      const double intra_share =
          intra_mass + inter_mass > 0.0 ? intra_mass / (intra_mass + inter_mass) : 1.0;

      NodePair replacement = e;
      for (int attempt = 0; attempt < kRewireAttempts; ++attempt) {
        NodeId partner;
        if (unit(rng) < intra_share || own.size() == n) {
          std::uniform_int_distribution<std::size_t> pick(0, own.size() - 1);
          partner = own[pick(rng)];
        } else {
          std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
          do {
            partner = pick(rng);
          } while (label[partner] == label[keep]);
        }
        NodePair cand = ordered(keep, partner);
        if (partner == keep || present.contains(cand)) continue;
        replacement = cand;
        break;
      }
      if (replacement != e) {
        present.erase(e);
        present.insert(replacement);
      }
      out.push_back(replacement);
    }
    dim_edges = std::move(out);
  }

  MultiDimGraph graph(n, dims, /*directed=*/false);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < c; ++k) names.push_back("c" + std::to_string(k));
  graph.set_labels(std::move(label), std::move(names));
  return graph;
}

}  // namespace mgcn
