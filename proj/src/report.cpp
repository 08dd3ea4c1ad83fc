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

#include "mgcn/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgcn {

void EvalReport::append(const EvalReport& other) {
  settings.insert(settings.end(), other.settings.begin(), other.settings.end());
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

double EvalReport::value(const std::string& dim, const std::string& ratio,
                         const std::string& split, const std::string& metric) const {
  for (const ReportRow& r : rows) {
    if (r.dim == dim && r.ratio == ratio && r.split == split && r.metric == metric) return r.value;
  }
  throw std::out_of_range("no report row " + dim + " " + ratio + " " + split + " " + metric);
}

std::string to_string(EvalTask task) {
  return task == EvalTask::kLinkPrediction ? "link_prediction" : "node_classification";
}

std::string format_ratio(double r) {
  std::ostringstream ss;
  ss << std::setprecision(6) << r;
  return ss.str();
}

void write_key_value(const EvalReport& report, std::ostream& out) {
  for (const auto& [key, value] : report.settings) out << "# " << key << ' ' << value << '\n';
  out << std::setprecision(17);
  const std::string task = to_string(report.task);
  for (const ReportRow& r : report.rows) {
    out << task << ' ' << r.dim << ' ' << r.ratio << ' ' << r.split << ' ' << r.metric << ' '
        << r.value << '\n';
  }
}

void write_table(const EvalReport& report, std::ostream& out) {
  out << to_string(report.task) << '\n';
  out << std::left << std::setw(8) << "dim" << std::setw(8) << "ratio" << std::setw(8) << "split"
      << std::setw(10) << "metric" << "value\n";
  for (const ReportRow& r : report.rows) {
    out << std::left << std::setw(8) << r.dim << std::setw(8) << r.ratio << std::setw(8) << r.split
        << std::setw(10) << r.metric << std::fixed << std::setprecision(4) << r.value
        << std::defaultfloat << '\n';
  }
}

}  // namespace mgcn
