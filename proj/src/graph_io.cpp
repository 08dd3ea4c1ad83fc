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

#include "mgcn/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "mgcn/errors.hpp"

namespace mgcn {
namespace {

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

std::uint64_t parse_id(const std::string& field, const std::string& source, std::size_t line_no,
                       const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(source, line_no, std::string("invalid ") + what + " '" + field + "'");
  }
  if (value > 0xffffffffULL) throw ParseError(source, line_no, std::string(what) + " too large");
  return value;
}

std::unique_ptr<std::ifstream> open_or_throw(const std::string& path) {
  auto in = std::make_unique<std::ifstream>(path);
  if (!*in) throw IoError("cannot open '" + path + "'");
  return in;
}

}  // namespace

MultiDimGraph read_per_dimension(std::span<std::istream* const> inputs,
                                 std::span<const std::string> sources,
                                 const EdgeListOptions& options) {
  std::vector<std::vector<NodePair>> edges(inputs.size());
  std::size_t n = options.num_nodes.value_or(0);
  for (std::size_t d = 0; d < inputs.size(); ++d) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*inputs[d], line)) {
      ++line_no;
      if (is_skippable(line)) continue;
      auto f = split_fields(line);
      if (f.size() != 2) {
        throw ParseError(sources[d], line_no, "expected 'src dst', got " +
                                                  std::to_string(f.size()) + " fields");
      }
      auto u = static_cast<NodeId>(parse_id(f[0], sources[d], line_no, "node id"));
      auto v = static_cast<NodeId>(parse_id(f[1], sources[d], line_no, "node id"));
      edges[d].emplace_back(u, v);
      n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    }
  }
  if (edges.empty()) edges.emplace_back();
  return MultiDimGraph(n, edges, options.directed);
}

MultiDimGraph read_triples(std::istream& in, const std::string& source,
                           const EdgeListOptions& options) {
  std::vector<std::vector<NodePair>> edges(options.num_dims.value_or(0));
  std::size_t n = options.num_nodes.value_or(0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    auto f = split_fields(line);
    if (f.size() != 3) {
      throw ParseError(source, line_no,
                       "expected 'dim src dst', got " + std::to_string(f.size()) + " fields");
    }
    auto d = parse_id(f[0], source, line_no, "dimension id");
    auto u = static_cast<NodeId>(parse_id(f[1], source, line_no, "node id"));
    auto v = static_cast<NodeId>(parse_id(f[2], source, line_no, "node id"));
    if (options.num_dims && d >= *options.num_dims) {
      throw std::out_of_range(source + ":" + std::to_string(line_no) + ": dimension id " +
                              std::to_string(d) + " >= " + std::to_string(*options.num_dims));
    }
    if (d >= edges.size()) edges.resize(d + 1);
    edges[d].emplace_back(u, v);
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
  }
  if (edges.empty()) edges.emplace_back();
  return MultiDimGraph(n, edges, options.directed);
}

MultiDimGraph load_edge_lists(std::span<const std::string> paths, const EdgeListOptions& options) {
  if (paths.empty()) throw std::invalid_argument("no edge files given");
  if (options.format == EdgeFormat::kTriples) {
    if (paths.size() != 1) throw std::invalid_argument("triples format takes a single file");
    auto in = open_or_throw(paths[0]);
    return read_triples(*in, paths[0], options);
  }
  std::vector<std::unique_ptr<std::ifstream>> files;
  std::vector<std::istream*> streams;
  for (const auto& p : paths) {
    files.push_back(open_or_throw(p));
    streams.push_back(files.back().get());
  }
  return read_per_dimension(streams, paths, options);
}

void read_labels(MultiDimGraph& graph, std::istream& in, const std::string& source) {
  std::vector<int> labels(graph.num_nodes(), -1);
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    auto f = split_fields(line);
    if (f.size() != 2) throw ParseError(source, line_no, "expected 'node label'");
    auto node = parse_id(f[0], source, line_no, "node id");
    if (node >= graph.num_nodes()) {
      throw std::out_of_range(source + ":" + std::to_string(line_no) + ": node " +
                              std::to_string(node) + " >= " + std::to_string(graph.num_nodes()));
    }
    auto [it, inserted] = ids.try_emplace(f[1], static_cast<int>(names.size()));
    if (inserted) names.push_back(f[1]);
    labels[node] = it->second;
  }
  graph.set_labels(std::move(labels), std::move(names));
}

void load_labels(MultiDimGraph& graph, const std::string& path) {
  auto in = open_or_throw(path);
  read_labels(graph, *in, path);
}

void write_triples(const MultiDimGraph& graph, std::ostream& out) {
  out << "# nodes " << graph.num_nodes() << " dims " << graph.num_dims() << '\n';
  for (DimId d = 0; d < graph.num_dims(); ++d) {
    for (auto [u, v] : graph.edges(d)) out << d << ' ' << u << ' ' << v << '\n';
  }
}

void write_dimension(const MultiDimGraph& graph, DimId dim, std::ostream& out) {
  for (auto [u, v] : graph.edges(dim)) out << u << ' ' << v << '\n';
}

void write_labels(const MultiDimGraph& graph, std::ostream& out) {
  const auto& labels = graph.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= 0) out << i << ' ' << graph.class_names()[labels[i]] << '\n';
  }
}

}  // namespace mgcn
