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

#include "mgcn/checkpoint.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "mgcn/errors.hpp"

namespace mgcn {
namespace {

constexpr const char* kMagic = "mgcn-checkpoint";
constexpr int kVersion = 1;

}  // namespace

void write_checkpoint(const Checkpoint& ckpt, std::ostream& out) {
  out << kMagic << ' ' << kVersion << '\n';
  for (const auto& [key, value] : ckpt.config) out << "config " << key << ' ' << value << '\n';
  const ModelParams& m = ckpt.model;
  out << std::setprecision(17);
  out << "model " << m.num_layers() << ' ' << m.num_dims() << ' ' << m.alpha << ' '
      << to_string(m.activation) << ' ' << to_string(m.attention_mode) << '\n';
  for_each_tensor(m.weights, [&out](const std::string& name, const Matrix& t) {
    out << "tensor " << name << ' ' << t.rows() << ' ' << t.cols() << '\n';
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      for (Eigen::Index c = 0; c < t.cols(); ++c) out << (c ? " " : "") << t(r, c);
      out << '\n';
    }
  });
  out << "end\n";
}

Checkpoint read_checkpoint(std::istream& in, const std::string& source) {
  Checkpoint ckpt;
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> std::istringstream {
    if (!std::getline(in, line)) throw ParseError(source, line_no + 1, "unexpected end of file");
    ++line_no;
    return std::istringstream(line);
  };

  {
    auto ss = next();
    std::string magic;
    int version = 0;
    if (!(ss >> magic >> version) || magic != kMagic) throw ParseError(source, line_no, "not a checkpoint");
    if (version != kVersion) throw ParseError(source, line_no, "unsupported checkpoint version");
  }
  std::size_t layers = 0, dims = 0;
  for (;;) {
    auto ss = next();
    std::string tag;
    ss >> tag;
    if (tag == "config") {
      std::string key, value;
      ss >> key;
      std::getline(ss >> std::ws, value);
      ckpt.config.emplace_back(key, value);
      continue;
    }
    if (tag != "model") throw ParseError(source, line_no, "expected 'config' or 'model'");
    std::string act, mode;
    if (!(ss >> layers >> dims >> ckpt.model.alpha >> act >> mode) || layers == 0 || dims == 0) {
      throw ParseError(source, line_no, "malformed model line");
    }
    ckpt.model.activation = parse_activation(act);
    ckpt.model.attention_mode = parse_attention_mode(mode);
    break;
  }

  ModelWeights& w = ckpt.model.weights;
  w.layers.resize(layers);
  for (auto& layer : w.layers) layer.proj.resize(dims);
  w.output_proj.resize(dims);
  for_each_tensor(w, [&](const std::string& name, Matrix& t) {
    auto ss = next();
    std::string tag, got;
    Eigen::Index rows = -1, cols = -1;
    if (!(ss >> tag >> got >> rows >> cols) || tag != "tensor" || got != name || rows < 0 || cols < 0) {
      throw ParseError(source, line_no, "expected tensor header for " + name);
    }
    t.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      auto row = next();
      for (Eigen::Index c = 0; c < cols; ++c) {
        if (!(row >> t(r, c))) throw ParseError(source, line_no, "short tensor row in " + name);
      }
    }
  });
  {
    auto ss = next();
    std::string tag;
    if (!(ss >> tag) || tag != "end") throw ParseError(source, line_no, "expected 'end'");
  }
  ckpt.model.validate();
  return ckpt;
}

void save_checkpoint(const Checkpoint& ckpt, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_checkpoint(ckpt, out);
  if (!out) throw IoError("write to '" + path + "' failed");
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_checkpoint(in, path);
}

}  // namespace mgcn
