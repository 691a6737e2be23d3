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

#include "expo/prox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "expo/errors.hpp"
#include "expo/lambert.hpp"

namespace expo {
namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

double checked_expm1(double e) {
  if (!(e <= kMaxExponent)) {
    throw NumericRangeError("prox output exponent " + std::to_string(e) +
                            " exceeds " + std::to_string(kMaxExponent));
  }
  return std::expm1(e);
}

std::vector<std::size_t> ascending_order(const std::vector<double>& keys,
                                         ProjectionCounters* counters) {
  std::vector<std::size_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b];
  });
  if (counters) ++counters->sorts;
  return perm;
}

void count_pass(ProjectionCounters* counters, std::size_t n) {
  if (!counters) return;
  ++counters->linear_passes;
  counters->element_visits += n;
}

// Projection on rescaled weights weight[i] = (|y_i| + beta) / s for a common
// s > 0. Dividing theta(j) by s gives
//   theta(j) / s = weight_j (D + k beta) - beta * sum_{i >= j} weight_i,
// and (|y_i| + beta) / z = weight_i (D + k_rho beta) / sum_{i >= rho} weight_i.
Vector project_weights(const std::vector<double>& weight,
                       const std::vector<double>& signs, double beta,
                       double radius,
                       ProjectionCounters* counters) {
  const std::size_t d = weight.size();
  const std::vector<std::size_t> perm = ascending_order(weight, counters);

  // suffix[j] = sum_{i >= j} weight[perm[i]]
  std::vector<double> suffix(d + 1, 0.0);
  for (std::size_t j = d; j-- > 0;) suffix[j] = suffix[j + 1] + weight[perm[j]];
  count_pass(counters, d);

  std::size_t rho = d - 1;
  for (std::size_t j = 0; j < d; ++j) {
    const double k = static_cast<double>(d - j);
    const double theta = weight[perm[j]] * (radius + k * beta) - beta * suffix[j];
    if (theta > 0.0) {
      rho = j;
      count_pass(counters, j + 1);
      break;
    }
    if (j + 1 == d) count_pass(counters, d);
  }

  const double k_rho = static_cast<double>(d - rho);
  const double inv_z = (radius + k_rho * beta) / suffix[rho];
  Vector x(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = std::max(weight[i] * inv_z - beta, 0.0) * signs[i];
  }
  count_pass(counters, d);
  return x;
}

}  // namespace

void CompositeRegularizer::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0) || !std::isfinite(gamma1) ||
      !std::isfinite(gamma2)) {
    throw DomainError("CompositeRegularizer: weights must be finite and >= 0");
  }
}

void BallConstraint::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("BallConstraint: radius must be positive and finite");
  }
}

double elastic_net_magnitude(double level, const CompositeRegularizer& r,
                             const EntropyParams& p) {
  const double threshold = r.gamma1 / p.alpha;
  if (level <= threshold) return 0.0;
  if (r.gamma2 == 0.0) {
    return p.beta * checked_expm1(level - threshold);
  }
  const double a = p.beta;
  const double b = r.gamma2 / p.alpha;
  const double c = threshold - level;
  // |x| = W0(ab exp(ab - c)) / b - a, with W0 taken in log form.
  const double ab = a * b;
  const double w = w0_from_log(std::log(ab) + ab - c).w;
  double m;
  if (w > 2.0 * ab) {
    m = w / b - a;
  } else {
    // W e^W = ab e^(ab - c) gives W / (ab) = exp(ab - c - W); this form
    // avoids the cancellation in W/b - a when W is close to ab.
    m = a * std::expm1(ab - c - w);
  }
  return std::max(m, 0.0);
}

Vector elastic_net_prox_dual(const Vector& v, const CompositeRegularizer& r,
                             const EntropyParams& p) {
  r.validate();
  Vector x(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    x[i] = sgn(v[i]) * elastic_net_magnitude(std::abs(v[i]), r, p);
  }
  return x;
}

Vector elastic_net_prox(const Vector& y, const CompositeRegularizer& r,
                        const EntropyParams& p) {
  if (r.gamma1 == 0.0 && r.gamma2 == 0.0) return y;
  return elastic_net_prox_dual(to_unit_dual(y, p.beta), r, p);
}

Vector l1_ball_project(const Vector& y, const BallConstraint& c,
                       const EntropyParams& p, ProjectionCounters* counters) {
  c.validate();
  const std::size_t d = static_cast<std::size_t>(y.size());
  std::vector<double> abs_y(d), signs(d);
  double norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    abs_y[i] = std::abs(y[i]);
    signs[i] = sgn(y[i]);
    norm += abs_y[i];
  }
  count_pass(counters, d);
  if (!(norm > c.radius)) {
    throw DomainError("l1_ball_project: requires |y|_1 > D");
  }

  const std::vector<std::size_t> perm = ascending_order(abs_y, counters);
  const double beta = p.beta;
  const double radius = c.radius;

  std::vector<double> suffix(d + 1, 0.0);
  for (std::size_t j = d; j-- > 0;) suffix[j] = suffix[j + 1] + abs_y[perm[j]];
  count_pass(counters, d);

  // theta(j) = |y_p(j)| (D + (d-j+1) beta) + beta D - beta sum_{i>=j} |y_p(i)|
  std::size_t rho = d - 1;
  for (std::size_t j = 0; j < d; ++j) {
    const double k = static_cast<double>(d - j);
    const double theta =
        abs_y[perm[j]] * (radius + k * beta) + beta * radius - beta * suffix[j];
    if (theta > 0.0) {
      rho = j;
      count_pass(counters, j + 1);
      break;
    }
    if (j + 1 == d) count_pass(counters, d);
  }

  const double k_rho = static_cast<double>(d - rho);
  const double z = (suffix[rho] + k_rho * beta) / (radius + k_rho * beta);
  Vector x(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = std::max((abs_y[i] + beta) / z - beta, 0.0) * signs[i];
  }
  count_pass(counters, d);
  return x;
}

Vector project_or_pass(const Vector& y, const BallConstraint& c,
                       const EntropyParams& p) {
  if (y.lpNorm<1>() <= c.radius) return y;
  return l1_ball_project(y, c, p);
}

Vector l1_ball_project_dual(const Vector& v, const BallConstraint& c,
                            const EntropyParams& p,
                            ProjectionCounters* counters) {
  c.validate();
  const std::size_t d = static_cast<std::size_t>(v.size());
  if (d == 0) throw DomainError("l1_ball_project_dual: empty input");
  const double top = max_abs(v);
  std::vector<double> weight(d), signs(d);
  for (std::size_t i = 0; i < d; ++i) {
    // (|y_i| + beta) / (beta e^top)
    weight[i] = std::exp(std::abs(v[i]) - top);
    signs[i] = sgn(v[i]);
  }
  count_pass(counters, d);
  return project_weights(weight, signs, p.beta, c.radius, counters);
}

Vector project_or_pass_dual(const Vector& v, const BallConstraint& c,
                            const EntropyParams& p) {
  if (max_abs(v) <= kMaxExponent) {
    Vector y = from_unit_dual(v, p.beta);
    if (y.lpNorm<1>() <= c.radius) return y;
  }
  return l1_ball_project_dual(v, c, p);
}

}  // namespace expo
