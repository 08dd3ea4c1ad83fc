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

#include <sstream>

#include "doctest.h"
#include "mgcn/errors.hpp"
#include "mgcn/graph_io.hpp"
#include "support/oracles.hpp"

using namespace mgcn;

namespace {

MultiDimGraph read_one(const std::string& text, EdgeListOptions opts = {}) {
  std::istringstream in(text);
  std::istream* streams[] = {&in};
  std::string names[] = {"mem"};
  return read_per_dimension(streams, names, opts);
}

}  // namespace

TEST_CASE("per-dimension edge lists") {
  auto g = read_one("0 1\n1 2");
  CHECK(g.num_nodes() == 3);
  CHECK(g.num_dims() == 1);
  CHECK(g.edges(0) == std::vector<NodePair>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(0, 2, 1));

  auto empty = read_one("");
  CHECK(empty.num_nodes() == 0);
  CHECK(empty.num_dims() == 1);

  CHECK(read_one("0 1\n0 1").num_edges(0) == 1);
  CHECK(read_one("# comment\n\n  # indented\n3 4\n").num_edges(0) == 1);
  CHECK(read_one("0 1", {.directed = true}).has_edge(0, 1, 0) == false);
}

TEST_CASE("parse errors carry the line number") {
  try {
    read_one("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(read_one("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(read_one("-1 2\n"), ParseError);
}

TEST_CASE("triples format") {
  std::istringstream in("0 0 1\n1 1 2\n# x\n0 2 3\n");
  auto g = read_triples(in, "mem", {});
  CHECK(g.num_dims() == 2);
  CHECK(g.num_nodes() == 4);
  CHECK(g.edges(0) == std::vector<NodePair>{{0, 1}, {2, 3}});

  std::istringstream bad("0 0 1\n2 1 2\n");
  CHECK_THROWS_AS(read_triples(bad, "mem", {.format = EdgeFormat::kTriples, .num_dims = 2}),
                  std::out_of_range);
  std::istringstream short_line("0 1\n");
  CHECK_THROWS_AS(read_triples(short_line, "mem", {}), ParseError);
}

TEST_CASE("missing file is an I/O error") {
  std::string paths[] = {"/nonexistent/edges.txt"};
  CHECK_THROWS_AS(load_edge_lists(paths, {}), IoError);
}

TEST_CASE("labels map strings to dense ids by first appearance") {
  auto g = read_one("0 1\n1 2\n2 3");
  std::istringstream in("2 ml\n0 theory\n1 ml\n");
  read_labels(g, in, "labels");
  CHECK(g.labels() == std::vector<int>{1, 0, 0, -1});
  CHECK(g.class_names() == std::vector<std::string>{"ml", "theory"});
  std::istringstream oob("9 ml\n");
  CHECK_THROWS_AS(read_labels(g, oob, "labels"), std::out_of_range);
}

TEST_CASE("export round-trips to an identical graph") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testing::random_graph(20 + trial, 1 + trial % 3, 0.2, rng);
    std::ostringstream out;
    write_triples(g, out);
    std::istringstream in(out.str());
    auto back = read_triples(in, "mem", {.format = EdgeFormat::kTriples,
                                         .num_nodes = g.num_nodes(),
                                         .num_dims = g.num_dims()});
    CHECK(back == g);

    std::ostringstream labels_out;
    std::vector<int> labels(g.num_nodes());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i % 3);
    g.set_labels(labels, {"a", "b", "c"});
    write_labels(g, labels_out);
    std::istringstream labels_in(labels_out.str());
    read_labels(back, labels_in, "mem");
    CHECK(back == g);
  }
}
