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

#include "mgcn/embedding_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mgcn/errors.hpp"

namespace mgcn {

void write_embedding(const RepMatrix& z, std::ostream& out) {
  out << z.cols() << ' ' << z.rows() << '\n';
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < z.cols(); ++i) {
    out << i;
    for (Eigen::Index r = 0; r < z.rows(); ++r) out << ' ' << z(r, i);
    out << '\n';
  }
}

void save_embedding(const RepMatrix& z, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_embedding(z, out);
  if (!out) throw IoError("write to '" + path + "' failed");
}

RepMatrix read_embedding(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, width = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    if (ss >> n >> width) break;
    throw ParseError(source, line_no, "expected 'N width' header");
  }
  if (n < 0 || width < 0) throw ParseError(source, line_no, "missing or negative header");
  RepMatrix z = RepMatrix::Zero(width, n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (long long row = 0; row < n; ++row) {
    if (!std::getline(in, line)) throw ParseError(source, line_no + 1, "truncated embedding");
    ++line_no;
    std::istringstream ss(line);
    long long node = -1;
    if (!(ss >> node) || node < 0 || node >= n || seen[node]) {
      throw ParseError(source, line_no, "bad or repeated node id");
    }
    seen[node] = true;
    for (long long r = 0; r < width; ++r) {
      if (!(ss >> z(r, node))) throw ParseError(source, line_no, "expected " + std::to_string(width) + " values");
    }
  }
  return z;
}

RepMatrix load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_embedding(in, path);
}

}  // namespace mgcn
