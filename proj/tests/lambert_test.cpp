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

#include <gtest/gtest.h>

#include "expo/errors.hpp"
#include "expo/rng.hpp"

namespace expo {
namespace {

// Bisection on w e^w = z, w in [0, max(1, ln(1+z))+1].
long double bisect_w0(long double z) {
  long double lo = 0.0L, hi = std::max(1.0L, std::log1p(z)) + 1.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (mid * std::exp(mid) < z ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

// Newton on w + ln w = s in long double.
long double newton_log(long double s) {
  long double w = std::max(1e-300L, s > 1 ? s - std::log(s) : std::exp(s));
  for (int i = 0; i < 100; ++i) w -= (w + std::log(w) - s) / (1.0L + 1.0L / w);
  return w;
}

TEST(Lambert, KnownValues) {
  EXPECT_EQ(w0(0.0).w, 0.0);
  EXPECT_NEAR(w0(1.0).w, 0.5671432904097838, 1e-15);
  EXPECT_NEAR(w0(M_E).w, 1.0, 1e-15);
  EXPECT_NEAR(w0(2.0 * std::exp(2.0)).w, 2.0, 1e-15);
}

TEST(Lambert, MatchesBisection) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const double z = std::exp(rng.uniform(-30.0, 300.0));
    const LambertResult r = w0(z);
    const double ref = static_cast<double>(bisect_w0(z));
    EXPECT_NEAR(r.w, ref, 1e-13 * std::max(1.0, ref)) << "z=" << z;
    EXPECT_LE(r.residual, 1e-13);
    EXPECT_LE(r.iterations, kLambertMaxIterations);
  }
}

TEST(Lambert, TinyArgumentsAreLinear) {
  for (double z : {1e-300, 1e-100, 1e-20, 1e-9}) {
    EXPECT_NEAR(w0(z).w, z - z * z, 1e-15 * z);
  }
}

TEST(Lambert, LogFormAgreesWithDirectForm) {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const double s = rng.uniform(-20.0, 6.0);
    EXPECT_NEAR(w0_from_log(s).w, w0(std::exp(s)).w, 1e-13 * std::max(1.0, w0(std::exp(s)).w));
  }
}

TEST(Lambert, LogFormBeyondOverflow) {
  const double w800 = w0_from_log(800.0).w;
  EXPECT_NEAR(w800, static_cast<double>(newton_log(800.0L)), 1e-12 * w800);
  EXPECT_NEAR(w800, 793.3, 0.05);
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const double s = std::exp(rng.uniform(0.0, std::log(1e8)));
    const LambertResult r = w0_from_log(s);
    EXPECT_NEAR(r.w, static_cast<double>(newton_log(s)), 1e-13 * r.w);
    EXPECT_LE(r.residual, 1e-12 * std::max(1.0, s));
  }
}

TEST(Lambert, RejectsBadArguments) {
  EXPECT_THROW(w0(-0.1), DomainError);
  EXPECT_THROW(w0(std::nan("")), DomainError);
  EXPECT_THROW(w0_from_log(std::numeric_limits<double>::infinity()), DomainError);
}

}  // namespace
}  // namespace expo
