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

// Adaptive optimistic mirror descent and FTRL with the generalized entropy.
//
// Both learners are implemented as a two-step update: form a dual point,
// map it back through grad psi*_{t+1}, then resolve the feasible mode
// (free, elastic-net regularized, or l1 ball). The stepsize scale is
//
//   alpha_{t+1} = eta * sqrt(eps0 + sum_{s<=t} |g_s - h_s|_inf^2).
//
// Dual points are kept in unit form v = z / alpha_{t+1} (see entropy.hpp).

#ifndef EXPO_LEARNERS_HPP_
#define EXPO_LEARNERS_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "expo/entropy.hpp"
#include "expo/prox.hpp"

namespace expo {

struct ScheduleParams {
  std::size_t dim = 1;
  double radius = 1.0;
  double eta = 1.0;
  double beta = 1.0;
  double epsilon0 = 1e-12;

  // beta = 1/d, eta = 1/sqrt(ln(D + 1) + ln d).
  static ScheduleParams defaults(std::size_t dim, double radius);

  double alpha(double sum_sq) const;
  void validate() const;
};

struct FreeMode {};

using FeasibleMode = std::variant<FreeMode, CompositeRegularizer, BallConstraint>;

std::string mode_name(const FeasibleMode& mode);

struct OmdState {
  Vector x;       // x_t
  double sum_sq = 0.0;
  Vector h_prev;  // h_t
  long round = 1;
  double alpha = 0.0;  // alpha used for the latest step (0 before the first)
};

struct FtrlState {
  Vector g_accum;
  Vector x1;
  Vector theta1;  // grad psi(x1) / alpha, independent of alpha
  double sum_sq = 0.0;
  Vector h_prev;
  long round = 1;
  double reg_weight_sum = 1.0;  // weight of r_{1:t}; r_1 counts once
  Vector x;
  double alpha = 0.0;
};

OmdState omd_init(const Vector& x1);
FtrlState ftrl_init(const Vector& x1, double beta);

// Maps the unit dual point v through grad psi*_{t+1} and resolves `mode`;
// `reg_weight` multiplies the regularizer of Regularized mode.
Vector resolve_mode(const Vector& v, const FeasibleMode& mode,
                    const EntropyParams& p, double reg_weight = 1.0);

// One AO-OMD round: consumes g_t, the hint h_{t+1} and the per-round
// regularizer weight (1 for plain online learning), returns the state
// holding x_{t+1}.
OmdState omd_step(const OmdState& state, const Vector& g, const Vector& h_next,
                  const FeasibleMode& mode, const ScheduleParams& sched,
                  double reg_weight = 1.0);

// One AO-FTRL round. The regularizer of Regularized mode is scaled by the
// cumulative weight r_{1:t+1}, i.e. (t + 1) with unit per-round weights.
FtrlState ftrl_step(const FtrlState& state, const Vector& g,
                    const Vector& h_next, const FeasibleMode& mode,
                    const ScheduleParams& sched, double reg_weight = 1.0);

// Running cumulative difference of two loss sequences.
std::vector<double> regret(const std::vector<double>& losses_player,
                           const std::vector<double>& losses_comparator);

// Value wrappers used by the harness and the acceleration driver.
class ExpOmd {
 public:
  ExpOmd(const ScheduleParams& sched, FeasibleMode mode, const Vector& x1);
  ExpOmd(const ScheduleParams& sched, FeasibleMode mode)
      : ExpOmd(sched, std::move(mode), Vector::Zero(sched.dim)) {}

  const Vector& x() const { return state_.x; }
  const OmdState& state() const { return state_; }
  void update(const Vector& g, const Vector& h_next, double reg_weight = 1.0);
  void update(const Vector& g) { update(g, Vector::Zero(g.size())); }

 private:
  ScheduleParams sched_;
  FeasibleMode mode_;
  OmdState state_;
};

class ExpFtrl {
 public:
  ExpFtrl(const ScheduleParams& sched, FeasibleMode mode, const Vector& x1);
  ExpFtrl(const ScheduleParams& sched, FeasibleMode mode)
      : ExpFtrl(sched, std::move(mode), Vector::Zero(sched.dim)) {}

  const Vector& x() const { return state_.x; }
  const FtrlState& state() const { return state_; }
  void update(const Vector& g, const Vector& h_next, double reg_weight = 1.0);
  void update(const Vector& g) { update(g, Vector::Zero(g.size())); }

 private:
  ScheduleParams sched_;
  FeasibleMode mode_;
  FtrlState state_;
};

}  // namespace expo

#endif  // EXPO_LEARNERS_HPP_
