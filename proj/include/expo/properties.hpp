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

// Sampled property checks of the math layer, run by `expo_bench props`.

#ifndef EXPO_PROPERTIES_HPP_
#define EXPO_PROPERTIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace expo {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // largest violation or error observed
  double tolerance = 0.0;
  std::size_t samples = 0;
};

std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace expo

#endif  // EXPO_PROPERTIES_HPP_
