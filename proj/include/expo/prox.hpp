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

// Bregman proximal solvers for psi:
//
//   elastic_net_prox:  argmin_x  g1 |x|_1 + g2/2 |x|_2^2 + B_psi(x, y)
//   l1_ball_project:   argmin_{|x|_1 <= D}  B_psi(x, y)
//
// Each solver has a primal entry point taking y and a "_dual" entry point
// taking the unit dual point v = to_unit_dual(y, beta). The dual forms never
// exponentiate |v|, so they accept points whose primal value overflows.

#ifndef EXPO_PROX_HPP_
#define EXPO_PROX_HPP_

#include <cstddef>

#include "expo/entropy.hpp"

namespace expo {

struct CompositeRegularizer {
  double gamma1 = 0.0;  // l1 (or nuclear) weight
  double gamma2 = 0.0;  // squared-l2 (or Frobenius) weight

  void validate() const;
  CompositeRegularizer scaled(double w) const { return {w * gamma1, w * gamma2}; }
};

struct BallConstraint {
  double radius = 1.0;

  void validate() const;
};

// Magnitude m >= 0 of the prox output for one coordinate with
// level = ln(|y|/beta + 1) >= 0. Zero when level <= gamma1/alpha, otherwise
// the root of  level = ln(m/beta + 1) + gamma1/alpha + (gamma2/alpha) m,
// via W0 in log form (gamma2 > 0) or the closed form (gamma2 == 0).
double elastic_net_magnitude(double level, const CompositeRegularizer& r,
                             const EntropyParams& p);

Vector elastic_net_prox(const Vector& y, const CompositeRegularizer& r,
                        const EntropyParams& p);
Vector elastic_net_prox_dual(const Vector& v, const CompositeRegularizer& r,
                             const EntropyParams& p);

// Operation counts of one projection call; used by tests to pin the
// one-sort-plus-linear-passes structure.
struct ProjectionCounters {
  int sorts = 0;
  int linear_passes = 0;
  std::size_t element_visits = 0;
};

// Sorting-based projection. Requires |y|_1 > D; callers that cannot
// guarantee it use project_or_pass.
Vector l1_ball_project(const Vector& y, const BallConstraint& c,
                       const EntropyParams& p,
                       ProjectionCounters* counters = nullptr);
Vector project_or_pass(const Vector& y, const BallConstraint& c,
                       const EntropyParams& p);

// Same projection on the unit dual point. Works on the rescaled weights
// (|y_i| + beta) / max_j (|y_j| + beta), which only need |v_i| - max|v|.
Vector l1_ball_project_dual(const Vector& v, const BallConstraint& c,
                            const EntropyParams& p,
                            ProjectionCounters* counters = nullptr);
// Passes from_unit_dual(v) through when its l1 norm is within the radius.
Vector project_or_pass_dual(const Vector& v, const BallConstraint& c,
                            const EntropyParams& p);

}  // namespace expo

#endif  // EXPO_PROX_HPP_
