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

// Principal branch W0 of the Lambert function on [0, inf).

#ifndef EXPO_LAMBERT_HPP_
#define EXPO_LAMBERT_HPP_

namespace expo {

struct LambertResult {
  double w = 0.0;
  // Relative residual |w e^w - z| / z. For w0_from_log this is
  // |w + ln w - s|, the same quantity measured in log space.
  double residual = 0.0;
  int iterations = 0;
};

inline constexpr int kLambertMaxIterations = 40;

// Solves w e^w = z by Halley iteration. Throws DomainError for z < 0 or
// non-finite z.
LambertResult w0(double z);

// Returns W0(exp(s)) without forming exp(s): solves w + ln w = s. Below
// s ~ -745 the result underflows to 0.
LambertResult w0_from_log(double s);

}  // namespace expo

#endif  // EXPO_LAMBERT_HPP_
