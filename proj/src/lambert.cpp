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

#include "expo/lambert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "expo/errors.hpp"

namespace expo {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

LambertResult w0(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw DomainError("w0: argument must be finite and nonnegative, got " +
                      std::to_string(z));
  }
  LambertResult r;
  if (z == 0.0) return r;

  // Asymptotic seeds; ln(1 + z) bounds W0 from above on [0, e].
  double w;
  if (z < 1e-3) {
    w = z * (1.0 - z);
  } else if (z <= M_E) {
    w = std::log1p(z) * 0.75;
  } else {
    const double lz = std::log(z);
    w = lz - std::log(lz);
  }

  for (int it = 1; it <= kLambertMaxIterations; ++it) {
    r.iterations = it;
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    // Halley: w -= f / (e^w (w + 1) - (w + 2) f / (2 (w + 1)))
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * std::max(std::abs(w), 1e-300)) break;
  }
  r.w = w;
  r.residual = std::abs(w * std::exp(w) - z) / z;
  return r;
}

LambertResult w0_from_log(double s) {
  if (!std::isfinite(s)) {
    throw DomainError("w0_from_log: argument must be finite");
  }
  // Iterate on u = ln w, solving g(u) = e^u + u - s = 0. g is increasing and
  // convex, so Halley converges from both sides of the root.
  double u;
  if (s <= 1.0) {
    u = s;
  } else {
    u = std::log(s - std::log(s));
  }
  LambertResult r;
  for (int it = 1; it <= kLambertMaxIterations; ++it) {
    r.iterations = it;
    const double eu = std::exp(u);
    const double g = eu + u - s;
    const double g1 = eu + 1.0;
    const double step = 2.0 * g * g1 / (2.0 * g1 * g1 - g * eu);
    u -= step;
    if (std::abs(step) <= 2.0 * kEps * std::max(std::abs(u), 1.0)) break;
  }
  r.w = std::exp(u);
  r.residual = r.w > 0.0 ? std::abs(r.w + std::log(r.w) - s) : 0.0;
  return r;
}

}  // namespace expo
