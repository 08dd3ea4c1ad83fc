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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mgcn/cli/commands.hpp"
#include "mgcn/embedding_io.hpp"
#include "mgcn/graph_io.hpp"
#include "mgcn/trainer.hpp"

using namespace mgcn;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const char* root = std::getenv("MGCN_TEST_TMP");
  fs::path p = fs::path(root ? root : fs::temp_directory_path().string()) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mgcn");
  std::ostringstream out, err;
  const int status = cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

// A small planted graph on disk, shared by the command tests.
fs::path small_graph() {
  static const fs::path dir = [] {
    fs::path d = scratch("graph");
    Run r = run({"synth", "--out", d.string(), "--seed", "5", "--synth-nodes", "60",
                 "--intra", "0.25", "--inter", "0.02"});
    REQUIRE(r.status == 0);
    return d;
  }();
  return dir;
}

std::vector<std::string> graph_flags() {
  const fs::path d = small_graph();
  return {"--dim-files", (d / "dim0.txt").string() + "," + (d / "dim1.txt").string() + "," +
                             (d / "dim2.txt").string(),
          "--embed", "8", "--epochs", "2", "--batch", "64"};
}

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("synth is deterministic and validates probabilities") {
  fs::path a = scratch("synth_a"), b = scratch("synth_b"), c = scratch("synth_c");
  CHECK(run({"synth", "--out", a.string(), "--seed", "9", "--synth-nodes", "50"}).status == 0);
  CHECK(run({"synth", "--out", b.string(), "--seed", "9", "--synth-nodes", "50"}).status == 0);
  for (const char* f : {"dim0.txt", "dim1.txt", "dim2.txt", "labels.txt"}) CHECK(slurp(a / f) == slurp(b / f));

  CHECK(run({"synth", "--out", c.string(), "--noise", "0", "--synth-nodes", "50"}).status == 0);
  CHECK(slurp(c / "dim0.txt") == slurp(c / "dim1.txt"));
  CHECK(slurp(c / "dim1.txt") == slurp(c / "dim2.txt"));

  Run bad = run({"synth", "--out", c.string(), "--intra", "1.5"});
  CHECK(bad.status == cli::kExitUsage);
  CHECK(bad.err.find("argument error") != std::string::npos);
}

TEST_CASE("train writes checkpoint and embedding, reproducibly") {
  fs::path a = scratch("train_a"), b = scratch("train_b");
  Run r1 = run(join({"train", "--out", a.string(), "--seed", "3"}, graph_flags()));
  REQUIRE(r1.status == 0);
  CHECK(count_lines(r1.out, "epoch ") == 2);
  CHECK(fs::exists(a / "model.ckpt"));
  CHECK(fs::exists(a / "config.json"));
  REQUIRE(run(join({"train", "--out", b.string(), "--seed", "3"}, graph_flags())).status == 0);
  CHECK(slurp(a / "embedding.txt") == slurp(b / "embedding.txt"));
  CHECK(slurp(a / "model.ckpt").find("mgcn-checkpoint 1") == 0);

  SUBCASE("echoed config reloads to an identical run") {
    fs::path c = scratch("train_c");
    std::string cfg = slurp(a / "config.json");
    // Redirect the output directory only.
    const auto pos = cfg.find(a.string());
    REQUIRE(pos != std::string::npos);
    cfg.replace(pos, a.string().size(), c.string());
    std::ofstream(c / "cfg.json") << cfg;
    REQUIRE(run({"train", "--config", (c / "cfg.json").string()}).status == 0);
    CHECK(slurp(c / "embedding.txt") == slurp(a / "embedding.txt"));
  }
}

TEST_CASE("train with zero epochs emits the initial embedding") {
  fs::path z = scratch("train_zero");
  auto flags = graph_flags();
  flags[4] = "--epochs";
  flags[5] = "0";
  Run r = run(join({"train", "--out", z.string(), "--seed", "4"}, flags));
  REQUIRE(r.status == 0);
  CHECK(count_lines(r.out, "epoch ") == 0);

  const fs::path d = small_graph();
  std::vector<std::string> files = {(d / "dim0.txt").string(), (d / "dim1.txt").string(),
                                    (d / "dim2.txt").string()};
  TrainConfig tc;
  tc.embed_width = 8;
  tc.batch_size = 64;
  tc.epochs = 0;
  tc.seed = 4;
  auto expect = train(load_edge_lists(files, {}), std::nullopt, tc).embedding;
  CHECK(load_embedding((z / "embedding.txt").string()) == expect);
}

TEST_CASE("missing inputs and bad config") {
  fs::path a = scratch("errors");
  Run missing = run({"train", "--dim-files", (a / "nope.txt").string(), "--out", a.string()});
  CHECK(missing.status == cli::kExitFailure);
  CHECK(missing.err.find("nope.txt") != std::string::npos);

  std::ofstream(a / "bad.json") << R"({"alpha": 0.5, "colour": "red"})";
  Run unknown = run({"train", "--config", (a / "bad.json").string()});
  CHECK(unknown.status == cli::kExitUsage);
  CHECK(unknown.err.find("colour") != std::string::npos);

  std::ofstream(a / "typed.json") << R"({"epochs": "many"})";
  CHECK(run({"train", "--config", (a / "typed.json").string()}).status == cli::kExitUsage);

  CHECK(run({"train", "--alpha", "2"}).status == cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run({"train", "--set", "nonsense=1"}).status == cli::kExitUsage);
}

TEST_CASE("flags override the config file") {
  fs::path a = scratch("override");
  std::ofstream(a / "c.json") << R"({"alpha": 0.2, "negatives": 4, "seed": 11})";
  Run r = run({"train", "--config", (a / "c.json").string(), "--alpha", "0.7", "--print-config"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["alpha"] == 0.7);
  CHECK(j["negatives"] == 4);
  CHECK(j["seed"] == 11);

  Run s = run({"train", "--config", (a / "c.json").string(), "--set", "negatives=6", "--neg", "5",
               "--print-config"});
  const auto k = nlohmann::json::parse(s.out.substr(s.out.find('{')));
  CHECK(k["negatives"] == 5);

  Run d = run({"train", "--print-config"});
  const auto defaults = nlohmann::json::parse(d.out.substr(d.out.find('{')));
  CHECK(defaults["embed_width"] == 64);
  CHECK(defaults["alpha"] == 0.5);
  CHECK(defaults["negatives"] == 2);
  CHECK(defaults["sample_size"] == 10);
  CHECK(defaults["layers"] == 1);
}

TEST_CASE("link-predict reports") {
  fs::path a = scratch("link");
  Run r = run(join({"link-predict", "--out", a.string(), "--fractions", "0.2"}, graph_flags()));
  REQUIRE(r.status == 0);
  const std::string report = slurp(a / "link_prediction.mgcn.txt");
  CHECK(count_lines(report, "link_prediction ") == 3);  // one row per dimension

  fs::path b = scratch("link_sweep");
  Run sweep = run(join({"link-predict", "--out", b.string(), "--variants", "mgcn,mgcn-noa,gcn",
                        "--dims", "1"},
                       graph_flags()));
  REQUIRE(sweep.status == 0);
  for (const char* v : {"mgcn", "mgcn-noa", "gcn"}) {
    const std::string rep = slurp(b / (std::string("link_prediction.") + v + ".txt"));
    CHECK(count_lines(rep, "link_prediction 1 0.2 0 auc") == 1);
  }

  Run bad = run(join({"link-predict", "--out", b.string(), "--dims", "7"}, graph_flags()));
  CHECK(bad.status == cli::kExitUsage);
  CHECK(bad.err.find("range error") != std::string::npos);
}

TEST_CASE("node-classify reports") {
  fs::path a = scratch("node");
  const fs::path labels = small_graph() / "labels.txt";
  Run r = run(join({"node-classify", "--out", a.string(), "--labels", labels.string(), "--splits", "2"},
                   graph_flags()));
  REQUIRE(r.status == 0);
  const std::string report = slurp(a / "node_classification.alpha0.5.txt");
  CHECK(count_lines(report, " mean ") == 10);  // 5 ratios x 2 metrics

  Run missing = run(join({"node-classify", "--out", a.string()}, graph_flags()));
  CHECK(missing.status == cli::kExitUsage);

  fs::path b = scratch("node_sweep");
  Run sweep = run(join({"node-classify", "--out", b.string(), "--labels", labels.string(), "--splits",
                        "1", "--ratios", "0.5", "--alphas", "0,0.3,0.5,0.7,1"},
                       graph_flags()));
  REQUIRE(sweep.status == 0);
  std::size_t reports = 0;
  for (const auto& e : fs::directory_iterator(b)) {
    reports += e.path().filename().string().rfind("node_classification.", 0) == 0 &&
               e.path().extension() == ".txt";
  }
  CHECK(reports == 5);
}

TEST_CASE("grad-check") {
  Run ok = run({"grad-check"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("worst ") != std::string::npos);

  Run k2 = run({"grad-check", "--layers", "2", "--variant", "mgcn-noa"});
  CHECK(k2.status == 0);

  Run bad = run({"grad-check", "--corrupt-gradient"});
  CHECK(bad.status == cli::kExitFailure);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("worst output_proj0") != std::string::npos);
}
