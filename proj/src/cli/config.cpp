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

#include "mgcn/cli/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "mgcn/errors.hpp"

namespace mgcn::cli {
namespace {

using nlohmann::json;

struct Key {
  std::function<json(const RunConfig&)> get;
  std::function<void(RunConfig&, const json&)> set;
};

template <typename T>
T as(const json& v, const std::string& key) {
  try {
    if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
      if (!v.is_number_unsigned()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError("");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type: " + v.dump());
  }
}

// Lists accept a scalar as a one-element list.
template <typename T>
std::vector<T> as_list(const json& v, const std::string& key) {
  std::vector<T> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(as<T>(e, key));
  } else {
    out.push_back(as<T>(v, key));
  }
  return out;
}

template <typename T, typename Field>
Key scalar(Field field) {
  return {[field](const RunConfig& c) {
            RunConfig copy = c;
            return json(field(copy));
          },
          [field](RunConfig& c, const json& v) { field(c) = as<T>(v, ""); }};
}

std::string format_name(EdgeFormat f) { return f == EdgeFormat::kTriples ? "triples" : "per-dimension"; }

EdgeFormat parse_format(const std::string& s) {
  if (s == "triples") return EdgeFormat::kTriples;
  if (s == "per-dimension" || s == "per_dimension") return EdgeFormat::kPerDimension;
  throw ConfigError("unknown edge_format '" + s + "'");
}

const std::map<std::string, Key>& registry() {
  static const std::map<std::string, Key> keys = [] {
    std::map<std::string, Key> k;
#define MGCN_SCALAR(name, type, expr) \
  k[name] = scalar<type>([](RunConfig& c) -> type& { return expr; })
    MGCN_SCALAR("seed", std::uint64_t, c.train.seed);
    MGCN_SCALAR("embed_width", std::size_t, c.train.embed_width);
    MGCN_SCALAR("dim_width", std::size_t, c.train.dim_width);
    MGCN_SCALAR("input_width", std::size_t, c.train.input_width);
    MGCN_SCALAR("alpha", double, c.train.alpha);
    MGCN_SCALAR("negatives", std::size_t, c.train.negatives);
    MGCN_SCALAR("sample_size", std::size_t, c.train.sample_size);
    MGCN_SCALAR("layers", std::size_t, c.train.layers);
    MGCN_SCALAR("learning_rate", double, c.train.adam.learning_rate);
    MGCN_SCALAR("beta1", double, c.train.adam.beta1);
    MGCN_SCALAR("beta2", double, c.train.adam.beta2);
    MGCN_SCALAR("epsilon", double, c.train.adam.epsilon);
    MGCN_SCALAR("batch_size", std::size_t, c.train.batch_size);
    MGCN_SCALAR("epochs", std::size_t, c.train.epochs);
    MGCN_SCALAR("directed", bool, c.directed);
    MGCN_SCALAR("num_nodes", std::size_t, c.num_nodes);
    MGCN_SCALAR("labels", std::string, c.labels);
    MGCN_SCALAR("features", std::string, c.features);
    MGCN_SCALAR("out", std::string, c.out);
    MGCN_SCALAR("splits", std::size_t, c.splits);
    MGCN_SCALAR("logreg_l2", double, c.logreg.l2);
    MGCN_SCALAR("logreg_lr", double, c.logreg.learning_rate);
    MGCN_SCALAR("logreg_iterations", std::size_t, c.logreg.iterations);
    MGCN_SCALAR("synth_nodes", std::size_t, c.synth.num_nodes);
    MGCN_SCALAR("synth_dims", std::size_t, c.synth.num_dims);
    MGCN_SCALAR("synth_communities", std::size_t, c.synth.num_communities);
    MGCN_SCALAR("synth_intra", double, c.synth.intra_prob);
    MGCN_SCALAR("synth_inter", double, c.synth.inter_prob);
    MGCN_SCALAR("synth_noise", double, c.synth.dim_noise);
    MGCN_SCALAR("gc_nodes", std::size_t, c.gc_nodes);
    MGCN_SCALAR("gc_dims", std::size_t, c.gc_dims);
    MGCN_SCALAR("gc_width", std::size_t, c.gc_width);
    MGCN_SCALAR("gc_epsilon", double, c.gc_epsilon);
    MGCN_SCALAR("gc_tolerance", double, c.gc_tolerance);
#undef MGCN_SCALAR

    k["variant"] = {[](const RunConfig& c) { return json(std::string(to_string(c.train.variant))); },
                    [](RunConfig& c, const json& v) {
                      c.train.variant = parse_variant(as<std::string>(v, "variant"));
                    }};
    k["activation"] = {
        [](const RunConfig& c) { return json(std::string(to_string(c.train.activation))); },
        [](RunConfig& c, const json& v) {
          c.train.activation = parse_activation(as<std::string>(v, "activation"));
        }};
    k["gc_activation"] = {
        [](const RunConfig& c) { return json(std::string(to_string(c.gc_activation))); },
        [](RunConfig& c, const json& v) {
          c.gc_activation = parse_activation(as<std::string>(v, "gc_activation"));
        }};
    k["edge_format"] = {[](const RunConfig& c) { return json(format_name(c.edge_format)); },
                        [](RunConfig& c, const json& v) {
                          c.edge_format = parse_format(as<std::string>(v, "edge_format"));
                        }};
    k["dim_files"] = {[](const RunConfig& c) { return json(c.dim_files); },
                      [](RunConfig& c, const json& v) {
                        c.dim_files = as_list<std::string>(v, "dim_files");
                      }};
    k["eval_dims"] = {[](const RunConfig& c) { return json(c.eval_dims); },
                      [](RunConfig& c, const json& v) {
                        c.eval_dims = as_list<std::size_t>(v, "eval_dims");
                      }};
    k["fractions"] = {[](const RunConfig& c) { return json(c.fractions); },
                      [](RunConfig& c, const json& v) { c.fractions = as_list<double>(v, "fractions"); }};
    k["ratios"] = {[](const RunConfig& c) { return json(c.ratios); },
                   [](RunConfig& c, const json& v) { c.ratios = as_list<double>(v, "ratios"); }};
    k["alphas"] = {[](const RunConfig& c) { return json(c.alphas); },
                   [](RunConfig& c, const json& v) { c.alphas = as_list<double>(v, "alphas"); }};
    k["variants"] = {[](const RunConfig& c) {
                       json a = json::array();
                       for (Variant v : c.variants) a.push_back(std::string(to_string(v)));
                       return a;
                     },
                     [](RunConfig& c, const json& v) {
                       c.variants.clear();
                       for (const auto& s : as_list<std::string>(v, "variants")) {
                         c.variants.push_back(parse_variant(s));
                       }
                     }};
    return k;
  }();
  return keys;
}

}  // namespace

json to_json(const RunConfig& config) {
  json j = json::object();
  for (const auto& [name, key] : registry()) j[name] = key.get(config);
  return j;
}

RunConfig apply_json(RunConfig base, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a flat JSON object");
  const auto& keys = registry();
  for (const auto& [name, value] : j.items()) {
    auto it = keys.find(name);
    if (it == keys.end()) throw ConfigError("unknown config key '" + name + "'");
    try {
      it->second.set(base, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config key '" + name + "': " + value.dump() + " is not valid");
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config key '" + name + "': " + e.what());
    }
  }
  return base;
}

RunConfig config_from_json(const json& j) { return apply_json(RunConfig{}, j); }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

json parse_flag_value(const std::string& key, const std::string& text) {
  static const std::set<std::string> textual = {"labels", "features", "out", "dim_files", "variant",
                                                "variants", "activation", "gc_activation", "edge_format"};
  if (textual.contains(key)) return json(text);
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return json(text);
  }
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& [name, key] : registry()) out.push_back(name);
  return out;
}

}  // namespace mgcn::cli
