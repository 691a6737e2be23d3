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
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "expo/errors.hpp"
#include "expo/rng.hpp"

namespace expo {
namespace {

// Root of level = ln(m/beta + 1) + (g1 + g2 m)/alpha by bisection.
long double bisect_magnitude(long double level, double g1, double g2, double a, double b) {
  auto f = [&](long double m) { return std::log1p(m / b) + (g1 + g2 * m) / a - level; };
  if (f(0.0L) >= 0.0L) return 0.0L;
  long double lo = 0.0L, hi = 1.0L;
  while (f(hi) < 0.0L) hi *= 2.0L;
  for (int i = 0; i < 300; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (f(mid) < 0.0L ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

// Scalar prox objective B_phi(x, y) + g1 |x| + g2/2 x^2, minimized by golden
// section over [-|y|, |y|].
double golden_prox(double y, double g1, double g2, const EntropyParams& p) {
  auto obj = [&](double x) {
    const double dx = std::abs(x), dy = std::abs(y);
    const double breg = p.alpha * ((dx + p.beta) * std::log((dx + p.beta) / (dy + p.beta)) - dx + dy) +
                        p.alpha * std::log1p(dy / p.beta) * (std::abs(x) - x * (y >= 0 ? 1 : -1)) ;
    return breg + g1 * dx + 0.5 * g2 * x * x;
  };
  double lo = std::min(0.0, y), hi = std::max(0.0, y);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 300; ++i) {
    const double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    (obj(a) < obj(b) ? hi : lo) = (obj(a) < obj(b) ? b : a);
  }
  return 0.5 * (lo + hi);
}

TEST(ElasticNet, ZeroRegularizerIsIdentity) {
  Rng rng(1);
  const EntropyParams p{1.5, 0.1};
  const Vector y = rng.uniform_vector(10, -5, 5);
  EXPECT_LT((elastic_net_prox(y, {0.0, 0.0}, p) - y).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ElasticNet, ThresholdsSmallInputs) {
  const EntropyParams p{1.0, 1.0};
  // level ln(2) < gamma1/alpha = 1
  EXPECT_EQ(elastic_net_magnitude(std::log(2.0), {1.0, 0.5}, p), 0.0);
  EXPECT_EQ(elastic_net_magnitude(1.0, {1.0, 0.0}, p), 0.0);
  EXPECT_GT(elastic_net_magnitude(1.0 + 1e-9, {1.0, 0.0}, p), 0.0);
}

TEST(ElasticNet, L1OnlyClosedForm) {
  const EntropyParams p{2.0, 0.5};
  const double level = 3.0;
  EXPECT_NEAR(elastic_net_magnitude(level, {1.0, 0.0}, p), 0.5 * std::expm1(2.5), 1e-14);
}

TEST(ElasticNet, MatchesBisectionOracle) {
  Rng rng(2);
  const double g2s[] = {0.0, 0.1, 10.0};
  for (int i = 0; i < 600; ++i) {
    const EntropyParams p{std::exp(rng.uniform(-2, 2)), std::exp(rng.uniform(-6, 0))};
    const CompositeRegularizer r{rng.uniform(0, 2), g2s[i % 3]};
    const double level = rng.uniform(0, 30);
    const double m = elastic_net_magnitude(level, r, p);
    const double ref = static_cast<double>(bisect_magnitude(level, r.gamma1, r.gamma2, p.alpha, p.beta));
    EXPECT_NEAR(m, ref, 1e-11 * std::max(1.0, ref));
  }
}

TEST(ElasticNet, MinimizesProxObjective) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const EntropyParams p{std::exp(rng.uniform(-1, 1)), std::exp(rng.uniform(-3, 0))};
    const CompositeRegularizer r{rng.uniform(0, 1), rng.uniform(0, 1)};
    const Vector y = rng.uniform_vector(4, -5, 5);
    const Vector x = elastic_net_prox(y, r, p);
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(x[j], golden_prox(y[j], r.gamma1, r.gamma2, p), 1e-6);
      EXPECT_GE(x[j] * y[j], 0.0);
    }
  }
}

TEST(ElasticNet, StationarityInOverflowRegime) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const EntropyParams p{std::exp(rng.uniform(-3, 0)), std::exp(rng.uniform(-8, 0))};
    const CompositeRegularizer r{rng.uniform(0, 1), i % 2 ? 0.1 : 10.0};
    const double level = rng.uniform(820, 5000);  // gamma1/alpha - level < -800
    ASSERT_LT(r.gamma1 / p.alpha - level, -800.0);
    Vector v(2);
    v << level, -level;
    const Vector x = elastic_net_prox_dual(v, r, p);
    EXPECT_TRUE(x.allFinite());
    EXPECT_GT(x[0], 0.0);
    EXPECT_EQ(x[1], -x[0]);
    const double m = x[0];
    const double res = std::log1p(m / p.beta) + (r.gamma1 + r.gamma2 * m) / p.alpha - level;
    EXPECT_LE(std::abs(res), 1e-9);
  }
}

TEST(ElasticNet, UnrepresentableL1OnlyRaises) {
  const EntropyParams p{1.0, 1.0};
  Vector v(1);
  v << 1000.0;
  EXPECT_THROW(elastic_net_prox_dual(v, {0.1, 0.0}, p), NumericRangeError);
}

TEST(ElasticNet, DualAndPrimalAgree) {
  Rng rng(5);
  const EntropyParams p{0.7, 0.05};
  const CompositeRegularizer r{0.2, 0.3};
  for (int i = 0; i < 50; ++i) {
    const Vector y = rng.uniform_vector(8, -10, 10);
    const Vector a = elastic_net_prox(y, r, p);
    const Vector b = elastic_net_prox_dual(to_unit_dual(y, p.beta), r, p);
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ElasticNet, ValidatesRegularizer) {
  EXPECT_THROW((CompositeRegularizer{-1.0, 0.0}.validate()), DomainError);
  EXPECT_THROW((CompositeRegularizer{0.0, -1.0}.validate()), DomainError);
  EXPECT_THROW((BallConstraint{0.0}.validate()), DomainError);
}

// Euclidean projection onto the l1 ball by sorting (used by the oracle).
Vector euclid_l1_project(const Vector& u, double radius) {
  if (u.lpNorm<1>() <= radius) return u;
  std::vector<double> a(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) a[i] = std::abs(u[i]);
  std::sort(a.rbegin(), a.rend());
  double cum = 0.0, tau = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    cum += a[k];
    const double t = (cum - radius) / double(k + 1);
    if (a[k] > t) tau = t;
  }
  Vector x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    x[i] = std::copysign(std::max(std::abs(u[i]) - tau, 0.0), u[i]);
  }
  return x;
}

// Generic oracle: projected gradient descent on B_psi(x, y) over the l1
// ball with a Lipschitz step.
Vector pgd_oracle(const Vector& y, double radius, const EntropyParams& p) {
  Vector x = euclid_l1_project(y, radius);
  const Vector gy = psi_grad(y, p);
  const double step = p.beta / p.alpha;
  for (int it = 0; it < 20000; ++it) {
    const Vector next = euclid_l1_project(x - step * (psi_grad(x, p) - gy), radius);
    if ((next - x).cwiseAbs().maxCoeff() < 1e-15) break;
    x = next;
  }
  return x;
}

TEST(L1Ball, MatchesGenericOracle) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto d = static_cast<Eigen::Index>(1 + rng.below(6));
    const EntropyParams p{std::exp(rng.uniform(-1, 1)), 1.0 / double(d)};
    Vector y = rng.uniform_vector(d, -3, 3);
    const double radius = rng.uniform(0.05, 0.95) * y.lpNorm<1>();
    ProjectionCounters counters;
    const Vector x = l1_ball_project(y, {radius}, p, &counters);
    const Vector ref = pgd_oracle(y, radius, p);
    EXPECT_LT((x - ref).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_NEAR(x.lpNorm<1>(), radius, 1e-10);
    EXPECT_EQ(counters.sorts, 1);
    EXPECT_LE(counters.linear_passes, 5);
    EXPECT_LE(counters.element_visits, 5u * std::size_t(d));
  }
}

TEST(L1Ball, WorkIsLinearAfterTheSort) {
  Rng rng(7);
  for (Eigen::Index d : {10, 100, 1000, 10000}) {
    const Vector y = rng.uniform_vector(d, -1, 1);
    ProjectionCounters counters;
    l1_ball_project(y, {0.1}, {1.0, 1.0 / double(d)}, &counters);
    EXPECT_EQ(counters.sorts, 1);
    EXPECT_LE(counters.element_visits, 5u * std::size_t(d));
  }
}

TEST(L1Ball, DualFormMatchesPrimal) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index d = 12;
    const EntropyParams p{1.0, 1.0 / double(d)};
    const Vector y = rng.uniform_vector(d, -20, 20);
    const BallConstraint c{rng.uniform(0.1, 5.0)};
    const Vector a = l1_ball_project(y, c, p);
    const Vector b = l1_ball_project_dual(to_unit_dual(y, p.beta), c, p);
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(L1Ball, DualFormHandlesHugeDuals) {
  Vector v(3);
  v << 5000.0, -4999.0, 10.0;
  const EntropyParams p{1.0, 1.0 / 3.0};
  const Vector x = l1_ball_project_dual(v, {2.0}, p);
  EXPECT_TRUE(x.allFinite());
  EXPECT_NEAR(x.lpNorm<1>(), 2.0, 1e-12);
  EXPECT_GT(x[0], 0.0);
  EXPECT_LT(x[1], 0.0);
  EXPECT_EQ(x[2], 0.0);
  // Weights of the two large entries differ by e^-1.
  EXPECT_NEAR((x[0] + p.beta) / (-x[1] + p.beta), std::exp(1.0), 1e-12);
}

TEST(L1Ball, InsideBallPassesThrough) {
  const EntropyParams p{1.0, 0.5};
  Vector y(2);
  y << 0.3, -0.2;
  EXPECT_THROW(l1_ball_project(y, {1.0}, p), DomainError);
  EXPECT_EQ(project_or_pass(y, {1.0}, p), y);
  EXPECT_LT((project_or_pass_dual(to_unit_dual(y, p.beta), {1.0}, p) - y).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(L1Ball, SingleCoordinate) {
  Vector y(1);
  y << -7.0;
  const Vector x = l1_ball_project(y, {2.0}, {1.0, 1.0});
  EXPECT_NEAR(x[0], -2.0, 1e-14);
}

}  // namespace
}  // namespace expo
