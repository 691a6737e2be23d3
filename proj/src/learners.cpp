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

#include "expo/learners.hpp"

#include <cmath>
#include <utility>

#include "expo/errors.hpp"

namespace expo {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_finite(const char* where, const Vector& v) {
  if (!v.allFinite()) throw DomainError(std::string(where) + ": non-finite input");
}

}  // namespace

ScheduleParams ScheduleParams::defaults(std::size_t dim, double radius) {
  ScheduleParams s;
  s.dim = dim;
  s.radius = radius;
  s.beta = 1.0 / static_cast<double>(dim);
  s.eta = std::sqrt(1.0 / (std::log(radius + 1.0) + std::log(static_cast<double>(dim))));
  return s;
}

double ScheduleParams::alpha(double sum_sq) const {
  return eta * std::sqrt(epsilon0 + sum_sq);
}

void ScheduleParams::validate() const {
  if (dim == 0) throw DomainError("ScheduleParams: dim must be positive");
  if (!(radius > 0.0)) throw DomainError("ScheduleParams: radius must be positive");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("ScheduleParams: eta must be positive");
  }
  if (!(beta > 0.0)) throw DomainError("ScheduleParams: beta must be positive");
  if (!(epsilon0 >= 0.0)) throw DomainError("ScheduleParams: epsilon0 must be >= 0");
}

std::string mode_name(const FeasibleMode& mode) {
  return std::visit(Overloaded{
                        [](const FreeMode&) { return std::string("free"); },
                        [](const CompositeRegularizer&) {
                          return std::string("regularized");
                        },
                        [](const BallConstraint&) { return std::string("ball"); },
                    },
                    mode);
}

OmdState omd_init(const Vector& x1) {
  OmdState s;
  s.x = x1;
  s.h_prev = Vector::Zero(x1.size());
  return s;
}

FtrlState ftrl_init(const Vector& x1, double beta) {
  FtrlState s;
  s.x1 = x1;
  s.x = x1;
  s.theta1 = to_unit_dual(x1, beta);
  s.g_accum = Vector::Zero(x1.size());
  s.h_prev = Vector::Zero(x1.size());
  return s;
}

Vector resolve_mode(const Vector& v, const FeasibleMode& mode,
                    const EntropyParams& p, double reg_weight) {
  return std::visit(
      Overloaded{
          [&](const FreeMode&) { return from_unit_dual(v, p.beta); },
          [&](const CompositeRegularizer& r) {
            const CompositeRegularizer w = r.scaled(reg_weight);
            if (w.gamma1 == 0.0 && w.gamma2 == 0.0) {
              return from_unit_dual(v, p.beta);
            }
            return elastic_net_prox_dual(v, w, p);
          },
          [&](const BallConstraint& c) { return project_or_pass_dual(v, c, p); },
      },
      mode);
}

OmdState omd_step(const OmdState& state, const Vector& g, const Vector& h_next,
                  const FeasibleMode& mode, const ScheduleParams& sched,
                  double reg_weight) {
  const auto d = static_cast<std::size_t>(state.x.size());
  check_dim("omd_step(g)", d, static_cast<std::size_t>(g.size()));
  check_dim("omd_step(h_next)", d, static_cast<std::size_t>(h_next.size()));
  check_finite("omd_step", g);
  check_finite("omd_step", h_next);

  OmdState next;
  next.sum_sq = state.sum_sq + std::pow(max_abs(g - state.h_prev), 2);
  const EntropyParams p{sched.alpha(next.sum_sq), sched.beta};
  p.validate();

  // z = grad psi_{t+1}(x_t) - (g_t - h_t + h_{t+1}), divided by alpha_{t+1}
  const Vector v =
      to_unit_dual(state.x, sched.beta) - (g - state.h_prev + h_next) / p.alpha;
  next.x = resolve_mode(v, mode, p, reg_weight);
  next.h_prev = h_next;
  next.round = state.round + 1;
  next.alpha = p.alpha;
  return next;
}

FtrlState ftrl_step(const FtrlState& state, const Vector& g,
                    const Vector& h_next, const FeasibleMode& mode,
                    const ScheduleParams& sched, double reg_weight) {
  const auto d = static_cast<std::size_t>(state.x1.size());
  check_dim("ftrl_step(g)", d, static_cast<std::size_t>(g.size()));
  check_dim("ftrl_step(h_next)", d, static_cast<std::size_t>(h_next.size()));
  check_finite("ftrl_step", g);
  check_finite("ftrl_step", h_next);

  FtrlState next = state;
  next.g_accum = state.g_accum + g;
  next.sum_sq = state.sum_sq + std::pow(max_abs(g - state.h_prev), 2);
  next.reg_weight_sum = state.reg_weight_sum + reg_weight;
  const EntropyParams p{sched.alpha(next.sum_sq), sched.beta};
  p.validate();

  // z = grad psi_{t+1}(x_1) - g_{1:t} - h_{t+1}, divided by alpha_{t+1}
  const Vector v = state.theta1 - (next.g_accum + h_next) / p.alpha;
  next.x = resolve_mode(v, mode, p, next.reg_weight_sum);
  next.h_prev = h_next;
  next.round = state.round + 1;
  next.alpha = p.alpha;
  return next;
}

std::vector<double> regret(const std::vector<double>& losses_player,
                           const std::vector<double>& losses_comparator) {
  check_dim("regret", losses_player.size(), losses_comparator.size());
  std::vector<double> out(losses_player.size());
  double acc = 0.0;
  for (std::size_t t = 0; t < out.size(); ++t) {
    acc += losses_player[t] - losses_comparator[t];
    out[t] = acc;
  }
  return out;
}

ExpOmd::ExpOmd(const ScheduleParams& sched, FeasibleMode mode, const Vector& x1)
    : sched_(sched), mode_(std::move(mode)), state_(omd_init(x1)) {
  sched_.validate();
  check_dim("ExpOmd(x1)", sched_.dim, static_cast<std::size_t>(x1.size()));
}

void ExpOmd::update(const Vector& g, const Vector& h_next, double reg_weight) {
  state_ = omd_step(state_, g, h_next, mode_, sched_, reg_weight);
}

ExpFtrl::ExpFtrl(const ScheduleParams& sched, FeasibleMode mode, const Vector& x1)
    : sched_(sched), mode_(std::move(mode)), state_(ftrl_init(x1, sched.beta)) {
  sched_.validate();
  check_dim("ExpFtrl(x1)", sched_.dim, static_cast<std::size_t>(x1.size()));
}

void ExpFtrl::update(const Vector& g, const Vector& h_next, double reg_weight) {
  state_ = ftrl_step(state_, g, h_next, mode_, sched_, reg_weight);
}

}  // namespace expo
