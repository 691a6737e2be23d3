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

// JSON form of ExperimentSpec. Keys mirror the struct fields; unknown keys
// are rejected.

#ifndef EXPO_CONFIG_HPP_
#define EXPO_CONFIG_HPP_

#include <string>

#include "expo/experiment.hpp"

namespace expo {

// Fields absent from `text` keep the defaults of `base`. Throws ConfigError.
ExperimentSpec parse_spec(const std::string& text, const ExperimentSpec& base);
ExperimentSpec load_spec(const std::string& path, const ExperimentSpec& base);

std::string spec_to_json(const ExperimentSpec& spec, int indent = 2);

// Sidecar metadata: the spec, library version and RNG identifier.
std::string metadata_json(const ExperimentSpec& spec);

ExperimentKind parse_kind(const std::string& name);
RadiusMode parse_radius_mode(const std::string& name);

}  // namespace expo

#endif  // EXPO_CONFIG_HPP_
