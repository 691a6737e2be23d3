// Copyright 2026 The Expo Authors.
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

#include "expo/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "expo/rng.hpp"
#include "json.hpp"

namespace expo {
namespace {

using json = nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "kind",       "dim",        "tasks", "rank", "horizon", "trials", "sparsity",
      "radius_mode", "algorithms", "seed",  "batch", "gamma1", "gamma2", "radius"};
  return keys;
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void read_count(const json& j, const char* key, std::size_t& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
  }
  out = v.get<std::size_t>();
}

}  // namespace

ExperimentKind parse_kind(const std::string& name) {
  if (name == "logistic") return ExperimentKind::kLogistic;
  if (name == "multitask") return ExperimentKind::kMultitask;
  if (name == "blackbox") return ExperimentKind::kBlackbox;
  throw ConfigError("unknown experiment kind: " + name);
}

RadiusMode parse_radius_mode(const std::string& name) {
  if (name == "known") return RadiusMode::kKnown;
  if (name == "half") return RadiusMode::kHalf;
  if (name == "double") return RadiusMode::kDouble;
  throw ConfigError("unknown radius_mode: " + name);
}

ExperimentSpec parse_spec(const std::string& text, const ExperimentSpec& base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : j.items()) {
    if (!known_keys().count(item.key())) throw ConfigError("unknown config key: " + item.key());
  }

  ExperimentSpec spec = base;
  if (j.contains("kind")) {
    std::string kind;
    read(j, "kind", kind);
    const ExperimentKind k = parse_kind(kind);
    if (k != spec.kind) {
      throw ConfigError("config kind '" + kind + "' does not match subcommand '" +
                        to_string(spec.kind) + "'");
    }
  }
  read_count(j, "dim", spec.dim);
  read_count(j, "tasks", spec.tasks);
  read_count(j, "rank", spec.rank);
  read_count(j, "horizon", spec.horizon);
  read_count(j, "trials", spec.trials);
  read(j, "sparsity", spec.sparsity);
  if (j.contains("radius_mode")) {
    std::string mode;
    read(j, "radius_mode", mode);
    spec.radius_mode = parse_radius_mode(mode);
  }
  read(j, "algorithms", spec.algorithms);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw ConfigError("config key 'seed' must be a non-negative integer");
    }
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  read_count(j, "batch", spec.batch);
  read(j, "gamma1", spec.gamma1);
  read(j, "gamma2", spec.gamma2);
  read(j, "radius", spec.radius);
  spec.validate();
  return spec;
}

ExperimentSpec load_spec(const std::string& path, const ExperimentSpec& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), base);
}

namespace {

json spec_json(const ExperimentSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  j["dim"] = spec.dim;
  j["tasks"] = spec.tasks;
  j["rank"] = spec.rank;
  j["horizon"] = spec.horizon;
  j["trials"] = spec.trials;
  j["sparsity"] = spec.sparsity;
  j["radius_mode"] = to_string(spec.radius_mode);
  j["algorithms"] = spec.algorithms;
  j["seed"] = spec.seed;
  j["batch"] = spec.batch;
  j["gamma1"] = spec.gamma1;
  j["gamma2"] = spec.gamma2;
  j["radius"] = spec.radius;
  return j;
}

}  // namespace

std::string spec_to_json(const ExperimentSpec& spec, int indent) {
  return spec_json(spec).dump(indent);
}

std::string metadata_json(const ExperimentSpec& spec) {
  json j;
  j["spec"] = spec_json(spec);
  j["library_version"] = kLibraryVersion;
  j["rng"] = Rng::kAlgorithm;
  return j.dump(2);
}

}  // namespace expo
