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

// Online-to-batch acceleration with weights a_t = t.
//
// Round t: take x_t from the inner learner, average
//   z_t = (a_t / a_{1:t}) x_t + (1 - a_t / a_{1:t}) z_{t-1},
// query a stochastic gradient g_t at z_t, and feed the learner a_t g_t with
// hint a_{t+1} g_t and regularizer weight a_{t+1}.
//
// Works with any learner exposing x() and update(g, hint, reg_weight):
// ExpOmd, ExpFtrl and their spectral versions.

#ifndef EXPO_ACCELERATION_HPP_
#define EXPO_ACCELERATION_HPP_

#include <type_traits>
#include <utility>

namespace expo {

template <class Learner>
struct AccelState {
  using Point = std::decay_t<decltype(std::declval<const Learner&>().x())>;

  explicit AccelState(Learner learner)
      : inner(std::move(learner)), z(Point::Zero(inner.x().rows(), inner.x().cols())) {}

  Learner inner;
  Point z;                  // z_t, zero before the first round
  double weight_sum = 0.0;  // a_{1:t}
  long round = 0;           // t
};

// Runs one round. `oracle(z)` returns a (stochastic) gradient of the smooth
// part at z. The returned state's z is the current solution estimate.
template <class Learner, class Oracle>
AccelState<Learner> accel_step(AccelState<Learner> state, Oracle&& oracle) {
  const long t = state.round + 1;
  const double a_t = static_cast<double>(t);
  const double a_next = static_cast<double>(t + 1);
  state.weight_sum += a_t;
  const double mix = a_t / state.weight_sum;
  state.z = mix * state.inner.x() + (1.0 - mix) * state.z;
  const auto g = oracle(std::as_const(state.z));
  state.inner.update(a_t * g, a_next * g, a_next);
  state.round = t;
  return state;
}

}  // namespace expo

#endif  // EXPO_ACCELERATION_HPP_
