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

#include "mgcn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mgcn {

double SparseRows::at(std::size_t r, NodeId c) const {
  auto cs = row_cols(r);
  auto it = std::lower_bound(cs.begin(), cs.end(), c);
  if (it == cs.end() || *it != c) return 0.0;
  return weights[offsets[r] + static_cast<std::size_t>(it - cs.begin())];
}

MultiDimGraph::MultiDimGraph(std::size_t num_nodes,
                             const std::vector<std::vector<NodePair>>& edges, bool directed)
    : num_nodes_(num_nodes), directed_(directed) {
  if (edges.empty()) throw std::invalid_argument("graph needs at least one dimension");
  dims_.reserve(edges.size());
  for (const auto& list : edges) {
    std::vector<NodePair> arcs;
    arcs.reserve(directed ? list.size() : 2 * list.size());
    for (auto [u, v] : list) {
      if (u >= num_nodes || v >= num_nodes) {
        throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") outside node range [0, " + std::to_string(num_nodes) + ")");
      }
      if (u == v) continue;
      arcs.emplace_back(u, v);
      if (!directed) arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Csr csr;
    csr.offsets.assign(num_nodes + 1, 0);
    for (auto [u, v] : arcs) ++csr.offsets[u + 1];
    for (std::size_t i = 0; i < num_nodes; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.reserve(arcs.size());
    for (auto [u, v] : arcs) csr.targets.push_back(v);
    dims_.push_back(std::move(csr));
  }
}

void MultiDimGraph::check_dim(DimId dim) const {
  if (dim >= dims_.size()) {
    throw std::out_of_range("dimension " + std::to_string(dim) + " >= " +
                            std::to_string(dims_.size()));
  }
}

std::span<const NodeId> MultiDimGraph::neighbors(DimId dim, NodeId node) const {
  check_dim(dim);
  if (node >= num_nodes_) throw std::out_of_range("node " + std::to_string(node) + " out of range");
  const Csr& c = dims_[dim];
  return {c.targets.data() + c.offsets[node], c.offsets[node + 1] - c.offsets[node]};
}

bool MultiDimGraph::has_edge(DimId dim, NodeId from, NodeId to) const {
  auto nb = neighbors(dim, from);
  return std::binary_search(nb.begin(), nb.end(), to);
}

std::vector<NodePair> MultiDimGraph::edges(DimId dim) const {
  check_dim(dim);
  std::vector<NodePair> out;
  const Csr& c = dims_[dim];
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (std::size_t k = c.offsets[u]; k < c.offsets[u + 1]; ++k) {
      NodeId v = c.targets[k];
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t MultiDimGraph::num_edges(DimId dim) const {
  check_dim(dim);
  std::size_t arcs = dims_[dim].targets.size();
  return directed_ ? arcs : arcs / 2;
}

void MultiDimGraph::set_labels(std::vector<int> labels, std::vector<std::string> class_names) {
  if (!labels.empty() && labels.size() != num_nodes_) {
    throw std::invalid_argument("label vector size " + std::to_string(labels.size()) +
                                " != node count " + std::to_string(num_nodes_));
  }
  for (int l : labels) {
    if (l < -1 || l >= static_cast<int>(class_names.size())) {
      throw std::out_of_range("class id " + std::to_string(l) + " out of range");
    }
  }
  labels_ = std::move(labels);
  class_names_ = std::move(class_names);
}

bool operator==(const MultiDimGraph& a, const MultiDimGraph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_dims() != b.num_dims() ||
      a.directed() != b.directed() || a.labels() != b.labels() ||
      a.class_names() != b.class_names()) {
    return false;
  }
  for (DimId d = 0; d < a.num_dims(); ++d) {
    if (a.edges(d) != b.edges(d)) return false;
  }
  return true;
}

NormalizedAdjacency normalize_adjacency(const MultiDimGraph& graph, DimId dim) {
  if (dim >= graph.num_dims()) throw std::out_of_range("dimension out of range");
  NormalizedAdjacency adj;
  adj.num_cols = graph.num_nodes();
  adj.offsets.reserve(graph.num_nodes() + 1);
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    auto pool = neighbor_pool(graph, i, dim);
    const double w = 1.0 / static_cast<double>(pool.size());
    for (NodeId j : pool) {
      adj.cols.push_back(j);
      adj.weights.push_back(w);
    }
    adj.offsets.push_back(adj.cols.size());
  }
  return adj;
}

std::vector<NodeId> neighbor_pool(const MultiDimGraph& graph, NodeId node, DimId dim) {
  auto nb = graph.neighbors(dim, node);
  std::vector<NodeId> pool;
  pool.reserve(nb.size() + 1);
  auto split = std::lower_bound(nb.begin(), nb.end(), node);
  pool.insert(pool.end(), nb.begin(), split);
  pool.push_back(node);
  pool.insert(pool.end(), split, nb.end());
  return pool;
}

std::vector<NodeId> sample_neighbors(const MultiDimGraph& graph, NodeId node, DimId dim,
                                     std::size_t s, Rng& rng) {
  if (s == 0) throw std::invalid_argument("sample size must be >= 1");
  auto pool = neighbor_pool(graph, node, dim);
  std::vector<NodeId> out;
  out.reserve(s);
  if (pool.size() < s) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t k = 0; k < s; ++k) out.push_back(pool[pick(rng)]);
    return out;
  }
  // Partial Fisher-Yates.
  for (std::size_t k = 0; k < s; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pool.size() - 1);
    std::swap(pool[k], pool[pick(rng)]);
    out.push_back(pool[k]);
  }
  return out;
}

LinkSplit split_links(const MultiDimGraph& graph, DimId dim, double fraction, Rng& rng) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("removal fraction must lie in (0, 1)");
  }
  if (dim >= graph.num_dims()) {
    throw std::out_of_range("evaluation dimension " + std::to_string(dim) + " >= " +
                            std::to_string(graph.num_dims()));
  }
  auto eval_edges = graph.edges(dim);
  if (eval_edges.size() < 2) throw std::invalid_argument("evaluation dimension needs >= 2 edges");
  const auto count =
      static_cast<std::size_t>(std::floor(fraction * static_cast<double>(eval_edges.size())));
  if (count == 0) throw std::invalid_argument("removal fraction selects no edges");

  std::vector<std::size_t> order(eval_edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(count);
  std::sort(order.begin(), order.end());

  LinkSplit split;
  split.eval_dim = dim;
  split.removed_fraction = fraction;
  std::set<NodePair> removed;
  for (std::size_t k : order) {
    NodePair p = eval_edges[k];
    split.test_positives.push_back(p);
    removed.insert(p);
    if (!graph.directed()) removed.emplace(p.second, p.first);
  }

  std::vector<std::vector<NodePair>> kept(graph.num_dims());
  for (DimId g = 0; g < graph.num_dims(); ++g) {
    for (const NodePair& e : graph.edges(g)) {
      if (!removed.contains(e)) kept[g].push_back(e);
    }
  }
  split.train_graph = MultiDimGraph(graph.num_nodes(), kept, graph.directed());
  split.train_graph.set_labels(graph.labels(), graph.class_names());
  return split;
}

MultiDimGraph aggregate_dimensions(const MultiDimGraph& graph) {
  std::vector<std::vector<NodePair>> merged(1);
  for (DimId d = 0; d < graph.num_dims(); ++d) {
    auto e = graph.edges(d);
    merged[0].insert(merged[0].end(), e.begin(), e.end());
  }
  MultiDimGraph out(graph.num_nodes(), merged, graph.directed());
  out.set_labels(graph.labels(), graph.class_names());
  return out;
}

}  // namespace mgcn
