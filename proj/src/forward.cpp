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

#include "mgcn/forward.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "mgcn/errors.hpp"
#include "mgcn/layers.hpp"

namespace mgcn {
namespace {

RepMatrix gather_columns(const RepMatrix& m, std::span<const NodeId> cols) {
  RepMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    out.col(static_cast<Eigen::Index>(c)) = m.col(static_cast<Eigen::Index>(cols[c]));
  }
  return out;
}

void check_plan(const ModelParams& model, const RepMatrix& x, const ForwardPlan& plan) {
  if (plan.layers.size() != model.num_layers()) {
    throw ShapeError("plan has " + std::to_string(plan.layers.size()) + " layers, model has " +
                     std::to_string(model.num_layers()));
  }
  if (x.rows() != model.input_width()) {
    throw ShapeError("input width " + std::to_string(x.rows()) + " != model input width " +
                     std::to_string(model.input_width()));
  }
  for (const LayerPlan& lp : plan.layers) {
    if (lp.aggregation.size() != model.num_dims()) {
      throw ShapeError("plan dimension count != model dimension count");
    }
  }
  for (NodeId n : plan.input_nodes()) {
    if (n >= x.cols()) throw ShapeError("input matrix lacks a column for node " + std::to_string(n));
  }
}

RepMatrix plan_input(const RepMatrix& x, const ForwardPlan& plan) {
  const auto& in = plan.input_nodes();
  bool identity = static_cast<Eigen::Index>(in.size()) == x.cols();
  for (std::size_t c = 0; identity && c < in.size(); ++c) identity = in[c] == c;
  return identity ? x : gather_columns(x, in);
}

}  // namespace

ForwardPlan full_plan(const MultiDimGraph& graph, std::size_t num_layers) {
  if (num_layers == 0) throw std::invalid_argument("num_layers must be >= 1");
  LayerPlan layer;
  layer.in_nodes.resize(graph.num_nodes());
  std::iota(layer.in_nodes.begin(), layer.in_nodes.end(), NodeId{0});
  layer.out_nodes = layer.in_nodes;
  layer.self_index = layer.in_nodes;
  layer.identity_self = true;
  for (DimId d = 0; d < graph.num_dims(); ++d) {
    layer.aggregation.push_back(normalize_adjacency(graph, d));
  }
  ForwardPlan plan;
  plan.layers.assign(num_layers, layer);
  return plan;
}

ForwardPlan sampled_plan(const MultiDimGraph& graph, std::span<const NodeId> targets,
                         std::size_t num_layers, std::size_t s, Rng& rng) {
  if (num_layers == 0) throw std::invalid_argument("num_layers must be >= 1");
  std::vector<NodeId> current;
  {
    std::unordered_map<NodeId, bool> seen;
    for (NodeId t : targets) {
      if (t >= graph.num_nodes()) throw std::out_of_range("target node out of range");
      if (seen.emplace(t, true).second) current.push_back(t);
    }
  }

  ForwardPlan plan;
  plan.layers.resize(num_layers);
  std::vector<NodeId> cols;
  std::vector<double> weights;
  std::vector<std::pair<NodeId, double>> row;
  for (std::size_t k = num_layers; k-- > 0;) {
    LayerPlan& lp = plan.layers[k];
    lp.out_nodes = current;
    lp.in_nodes = current;
    std::unordered_map<NodeId, NodeId> local;
    for (std::size_t c = 0; c < current.size(); ++c) local.emplace(current[c], static_cast<NodeId>(c));
    lp.self_index.resize(current.size());
    std::iota(lp.self_index.begin(), lp.self_index.end(), NodeId{0});

    for (DimId d = 0; d < graph.num_dims(); ++d) {
      SparseRows agg;
      for (NodeId o : lp.out_nodes) {
        sampled_row(graph, o, d, s, rng, cols, weights);
        row.clear();
        for (std::size_t e = 0; e < cols.size(); ++e) {
          auto [it, inserted] = local.try_emplace(cols[e], static_cast<NodeId>(lp.in_nodes.size()));
          if (inserted) lp.in_nodes.push_back(cols[e]);
          row.emplace_back(it->second, weights[e]);
        }
        std::sort(row.begin(), row.end());
        // Draws with equal ids merge into one weighted entry.
        for (std::size_t e = 0; e < row.size(); ++e) {
          if (!agg.cols.empty() && agg.cols.size() > agg.offsets.back() &&
              agg.cols.back() == row[e].first) {
            agg.weights.back() += row[e].second;
          } else {
            agg.cols.push_back(row[e].first);
            agg.weights.push_back(row[e].second);
          }
        }
        agg.offsets.push_back(agg.cols.size());
      }
      lp.aggregation.push_back(std::move(agg));
    }
    for (SparseRows& agg : lp.aggregation) agg.num_cols = lp.in_nodes.size();
    lp.identity_self = lp.in_nodes.size() == lp.out_nodes.size();
    current = lp.in_nodes;
  }
  return plan;
}

RepMatrix forward(const ModelParams& model, const RepMatrix& x, const ForwardPlan& plan,
                  ForwardCache* cache) {
  check_plan(model, x, plan);
  if (cache) cache->layers.assign(plan.layers.size(), LayerCache{});
  RepMatrix h = plan_input(x, plan);
  for (std::size_t k = 0; k < plan.layers.size(); ++k) {
    const LayerParams& layer = model.weights.layers[k];
    const LayerPlan& lp = plan.layers[k];
    const std::size_t dims = layer.num_dims();

    std::vector<RepMatrix> pre(dims), e(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      pre[d] = layer.proj[d] * h;
      e[d] = activate(pre[d], model.activation);
    }
    Matrix b = attention_weights(layer, model.attention_mode);

    std::vector<RepMatrix> self;
    if (model.alpha > 0.0) {
      if (lp.identity_self) {
        self = e;
      } else {
        for (const RepMatrix& m : e) self.push_back(gather_columns(m, lp.self_index));
      }
    }
    std::vector<RepMatrix> across;
    if (model.alpha > 0.0) across = across_dim_aggregate(self, b);

    std::vector<RepMatrix> blended(dims);
    for (std::size_t d = 0; d < dims; ++d) {
      RepMatrix within = within_dim_aggregate(e[d], lp.aggregation[d]);
      blended[d] = model.alpha > 0.0 ? blend(within, across[d], model.alpha) : std::move(within);
    }
    Matrix concat = dims == 1 ? blended.front() : concat_dimensions(blended);
    RepMatrix pre_out = layer.combine * concat;
    RepMatrix out = activate(pre_out, model.activation);

    if (cache) {
      LayerCache& lc = cache->layers[k];
      lc.input = std::move(h);
      lc.pre_proj = std::move(pre);
      lc.proj = std::move(e);
      lc.self_proj = std::move(self);
      lc.attention = std::move(b);
      lc.blended = std::move(blended);
      lc.concat = std::move(concat);
      lc.pre_out = std::move(pre_out);
      lc.output = out;
    }
    h = std::move(out);
  }
  return h;
}

RepMatrix forward(const ModelParams& model, const RepMatrix& x, const MultiDimGraph& graph) {
  return forward(model, x, full_plan(graph, model.num_layers()));
}

RepMatrix forward_sampled(const ModelParams& model, const RepMatrix& x,
                          const MultiDimGraph& graph, std::size_t s, Rng& rng) {
  std::vector<NodeId> all(graph.num_nodes());
  std::iota(all.begin(), all.end(), NodeId{0});
  return forward(model, x, sampled_plan(graph, all, model.num_layers(), s, rng));
}

RepMatrix gcn_forward(const ModelParams& model, const RepMatrix& x, const ForwardPlan& plan) {
  if (model.num_dims() != 1) throw ShapeError("the GCN path needs a single-dimension model");
  check_plan(model, x, plan);
  RepMatrix h = plan_input(x, plan);
  for (std::size_t k = 0; k < plan.layers.size(); ++k) {
    const LayerParams& layer = model.weights.layers[k];
    RepMatrix e = activate(layer.proj.front() * h, model.activation);
    RepMatrix aggregated = within_dim_aggregate(e, plan.layers[k].aggregation.front());
    h = activate(layer.combine * aggregated, model.activation);
  }
  return h;
}

}  // namespace mgcn
