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

// Comparison learners: diagonal AdaGrad (mirror descent), AdaFTRL, and
// exponentiated gradient on the doubled simplex (EG+-).

#ifndef EXPO_BASELINES_HPP_
#define EXPO_BASELINES_HPP_

#include "expo/entropy.hpp"
#include "expo/learners.hpp"

namespace expo {

inline constexpr double kAdagradFloor = 1e-6;

struct DiagProxState {
  Vector h_diag;   // floor + sum of squared gradients, per coordinate
  Vector g_accum;  // used by AdaFTRL only
  Vector x;
  long round = 1;
};

DiagProxState diag_prox_init(std::size_t dim);

// argmin_{|x|_1 <= D} 1/2 sum_i w_i (x_i - u_i)^2 for weights w > 0.
Vector weighted_l1_ball_project(const Vector& u, const Vector& weights,
                                double radius);

// x_{t+1} = argmin_{x in K} <g, x> + 1/2 (x - x_t)^T diag(h)^{1/2} (x - x_t)
// with h already including g_t. Regularized mode adds the elastic net.
DiagProxState adagrad_step(const DiagProxState& state, const Vector& g,
                           const FeasibleMode& mode);

// x_{t+1} = argmin_{x in K} <g_{1:t}, x> + 1/2 x^T diag(h)^{1/2} x, with
// the regularizer weighted by (t + 1) in Regularized mode.
DiagProxState adaftrl_step(const DiagProxState& state, const Vector& g,
                           const FeasibleMode& mode);

struct EgPmState {
  Vector log_weights;  // 2d entries; weights live on the simplex of mass D
  double radius = 1.0;
  double sum_sq = 0.0;  // sum of |g_s|_inf^2 for the default stepsize
  Vector x;
  long round = 1;
};

EgPmState eg_pm_init(std::size_t dim, double radius);

// sqrt(1 / sum_{s<=t} |g_s|_inf^2) including the current gradient; +inf
// when every gradient so far was zero (the update is then a no-op).
double eg_pm_default_stepsize(const EgPmState& state, const Vector& g);

// Multiplicative update of the doubled weights with [D/2 g, -D/2 g];
// returns the state holding x = w_+ - w_-.
EgPmState eg_pm_step(const EgPmState& state, const Vector& g, double radius,
                     double stepsize);

class AdaGrad {
 public:
  AdaGrad(std::size_t dim, FeasibleMode mode)
      : mode_(std::move(mode)), state_(diag_prox_init(dim)) {}
  const Vector& x() const { return state_.x; }
  const DiagProxState& state() const { return state_; }
  void update(const Vector& g) { state_ = adagrad_step(state_, g, mode_); }

 private:
  FeasibleMode mode_;
  DiagProxState state_;
};

class AdaFtrl {
 public:
  AdaFtrl(std::size_t dim, FeasibleMode mode)
      : mode_(std::move(mode)), state_(diag_prox_init(dim)) {}
  const Vector& x() const { return state_.x; }
  const DiagProxState& state() const { return state_; }
  void update(const Vector& g) { state_ = adaftrl_step(state_, g, mode_); }

 private:
  FeasibleMode mode_;
  DiagProxState state_;
};

class EgPm {
 public:
  EgPm(std::size_t dim, double radius) : state_(eg_pm_init(dim, radius)) {}
  const Vector& x() const { return state_.x; }
  const EgPmState& state() const { return state_; }
  void update(const Vector& g) {
    state_ = eg_pm_step(state_, g, state_.radius, eg_pm_default_stepsize(state_, g));
  }

 private:
  EgPmState state_;
};

}  // namespace expo

#endif  // EXPO_BASELINES_HPP_
