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

// Two-point gradient estimator for black-box objectives:
//
//   (1/b) sum_i (delta / mu) (f(x + mu v_i) - f(x)) v_i

#ifndef EXPO_ZEROTH_ORDER_HPP_
#define EXPO_ZEROTH_ORDER_HPP_

#include <cstddef>
#include <functional>

#include "expo/entropy.hpp"
#include "expo/rng.hpp"

namespace expo {

enum class DirectionLaw { kUnitSphere, kRademacher };

struct EstimatorConfig {
  double delta = 1.0;
  double mu = 1e-3;
  std::size_t batch = 1;
  DirectionLaw law = DirectionLaw::kRademacher;

  void validate() const;

  // mu = 1 / sqrt(d T).
  static double default_mu(std::size_t dim, std::size_t horizon);
  // delta = 1 with Rademacher directions (exponentiated learners).
  static EstimatorConfig rademacher(std::size_t dim, std::size_t horizon,
                                    std::size_t batch);
  // delta = d with unit-sphere directions (AdaGrad-style learners).
  static EstimatorConfig unit_sphere(std::size_t dim, std::size_t horizon,
                                     std::size_t batch);
};

using Objective = std::function<double(const Vector&)>;

Vector sample_direction(Eigen::Index dim, DirectionLaw law, Rng& rng);

// Uses exactly batch + 1 evaluations of f; f(x) is shared by the batch.
Vector two_point_grad(const Objective& f, const Vector& x,
                      const EstimatorConfig& cfg, Rng& rng);

}  // namespace expo

#endif  // EXPO_ZEROTH_ORDER_HPP_
