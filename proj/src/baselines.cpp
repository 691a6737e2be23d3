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

#include "expo/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expo/errors.hpp"

namespace expo {
namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

double soft(double u, double tau) { return sgn(u) * std::max(std::abs(u) - tau, 0.0); }

Vector threshold_all(const Vector& u, const Vector& weights, double lambda) {
  Vector x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) x[i] = soft(u[i], lambda / weights[i]);
  return x;
}

}  // namespace

DiagProxState diag_prox_init(std::size_t dim) {
  DiagProxState s;
  const auto d = static_cast<Eigen::Index>(dim);
  s.h_diag = Vector::Constant(d, kAdagradFloor);
  s.g_accum = Vector::Zero(d);
  s.x = Vector::Zero(d);
  return s;
}

Vector weighted_l1_ball_project(const Vector& u, const Vector& weights,
                                double radius) {
  check_dim("weighted_l1_ball_project", static_cast<std::size_t>(u.size()),
            static_cast<std::size_t>(weights.size()));
  if (u.lpNorm<1>() <= radius) return u;

  // x_i = sgn(u_i) max(|u_i| - lambda / w_i, 0); bisection on lambda for
  // sum |x_i| = D, then an exact solve on the detected active set.
  double lo = 0.0;
  double hi = (u.cwiseAbs().cwiseProduct(weights)).maxCoeff();
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (threshold_all(u, weights, mid).lpNorm<1>() > radius) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double abs_sum = 0.0;
  double inv_w_sum = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) * weights[i] > hi) {
      abs_sum += std::abs(u[i]);
      inv_w_sum += 1.0 / weights[i];
    }
  }
  if (inv_w_sum > 0.0) {
    const double exact = (abs_sum - radius) / inv_w_sum;
    if (exact >= lo && exact <= hi) {
      Vector x = threshold_all(u, weights, exact);
      if (x.lpNorm<1>() <= radius * (1.0 + 1e-14)) return x;
    }
  }
  return threshold_all(u, weights, hi);
}

DiagProxState adagrad_step(const DiagProxState& state, const Vector& g,
                           const FeasibleMode& mode) {
  check_dim("adagrad_step", static_cast<std::size_t>(state.x.size()),
            static_cast<std::size_t>(g.size()));
  DiagProxState next = state;
  next.h_diag = state.h_diag + g.cwiseAbs2();
  const Vector s = next.h_diag.cwiseSqrt();
  if (const auto* r = std::get_if<CompositeRegularizer>(&mode)) {
    const Vector u = s.cwiseProduct(state.x) - g;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      next.x[i] = soft(u[i], r->gamma1) / (s[i] + r->gamma2);
    }
  } else {
    const Vector u = state.x - g.cwiseQuotient(s);
    if (const auto* c = std::get_if<BallConstraint>(&mode)) {
      next.x = weighted_l1_ball_project(u, s, c->radius);
    } else {
      next.x = u;
    }
  }
  next.round = state.round + 1;
  return next;
}

DiagProxState adaftrl_step(const DiagProxState& state, const Vector& g,
                           const FeasibleMode& mode) {
  check_dim("adaftrl_step", static_cast<std::size_t>(state.x.size()),
            static_cast<std::size_t>(g.size()));
  DiagProxState next = state;
  next.h_diag = state.h_diag + g.cwiseAbs2();
  next.g_accum = state.g_accum + g;
  const Vector s = next.h_diag.cwiseSqrt();
  if (const auto* r = std::get_if<CompositeRegularizer>(&mode)) {
    const double w = static_cast<double>(state.round + 1);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      next.x[i] = soft(-next.g_accum[i], w * r->gamma1) / (s[i] + w * r->gamma2);
    }
  } else {
    const Vector u = -next.g_accum.cwiseQuotient(s);
    if (const auto* c = std::get_if<BallConstraint>(&mode)) {
      next.x = weighted_l1_ball_project(u, s, c->radius);
    } else {
      next.x = u;
    }
  }
  next.round = state.round + 1;
  return next;
}

EgPmState eg_pm_init(std::size_t dim, double radius) {
  if (!(radius > 0.0)) throw DomainError("eg_pm_init: radius must be positive");
  EgPmState s;
  const auto d = static_cast<Eigen::Index>(dim);
  s.radius = radius;
  s.log_weights = Vector::Constant(2 * d, std::log(radius / (2.0 * dim)));
  s.x = Vector::Zero(d);
  return s;
}

double eg_pm_default_stepsize(const EgPmState& state, const Vector& g) {
  const double total = state.sum_sq + std::pow(max_abs(g), 2);
  if (total == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(1.0 / total);
}

EgPmState eg_pm_step(const EgPmState& state, const Vector& g, double radius,
                     double stepsize) {
  if (!(radius > 0.0)) throw DomainError("eg_pm_step: radius must be positive");
  const Eigen::Index d = state.x.size();
  check_dim("eg_pm_step", static_cast<std::size_t>(d), static_cast<std::size_t>(g.size()));
  EgPmState next = state;
  next.radius = radius;
  next.sum_sq = state.sum_sq + std::pow(max_abs(g), 2);
  next.round = state.round + 1;
  if (max_abs(g) == 0.0 || !(stepsize < std::numeric_limits<double>::infinity())) {
    return next;
  }
  const double scale = stepsize * radius / 2.0;
  next.log_weights.head(d) -= scale * g;
  next.log_weights.tail(d) += scale * g;
  const double top = next.log_weights.maxCoeff();
  const double lse = top + std::log((next.log_weights.array() - top).exp().sum());
  next.log_weights.array() += std::log(radius) - lse;
  const Vector w = next.log_weights.array().exp();
  next.x = w.head(d) - w.tail(d);
  return next;
}

}  // namespace expo
