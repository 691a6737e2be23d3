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

#include "expo/properties.hpp"

#include <algorithm>
#include <cmath>

#include "expo/entropy.hpp"
#include "expo/prox.hpp"
#include "expo/rng.hpp"
#include "expo/spectral.hpp"
#include "expo/zeroth_order.hpp"

namespace expo {
namespace {

// Uniform point in the l1 ball of the given radius (random direction,
// radius scaled by U^(1/d)).
Vector ball_point(Rng& rng, Eigen::Index d, double radius) {
  Vector v = rng.normal_vector(d);
  const double n1 = v.lpNorm<1>();
  const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
  return n1 > 0.0 ? Vector(v * (r / n1)) : Vector(Vector::Zero(d));
}

Matrix nuclear_ball_point(Rng& rng, Eigen::Index m, Eigen::Index n, double radius) {
  SvdFactors f = svd(rng.normal_matrix(m, n));
  f.s = ball_point(rng, f.s.size(), radius).cwiseAbs();
  return f.reconstruct();
}

PropertyResult check(std::string name, double worst, double tol, std::size_t samples) {
  return {std::move(name), worst <= tol, worst, tol, samples};
}

PropertyResult mirror_inverse(Rng& rng) {
  const EntropyParams p{1.0, 1.0 / 50.0};
  double worst = 0.0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = rng.uniform_vector(50, -100.0, 100.0);
    const Vector back = psi_conj_grad(psi_grad(x, p), p);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      worst = std::max(worst, std::abs(back[j] - x[j]) / std::max(1.0, std::abs(x[j])));
    }
  }
  return check("mirror map inversion", worst, 1e-9, n);
}

PropertyResult strong_convexity(Rng& rng) {
  const double radius = 2.0;
  const EntropyParams p{1.0, 0.2};
  double worst = 0.0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = ball_point(rng, 5, radius);
    const Vector y = ball_point(rng, 5, radius);
    const double lower =
        p.alpha / (2.0 * (radius + 5 * p.beta)) * std::pow((x - y).lpNorm<1>(), 2);
    worst = std::max(worst, lower - bregman(x, y, p));
  }
  return check("entropy strong convexity (l1)", worst, 1e-9, n);
}

PropertyResult spectral_strong_convexity(Rng& rng) {
  const double radius = 2.0;
  const EntropyParams p{1.0, 1.0 / 3.0};
  double worst = 0.0;
  const std::size_t n = 200;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix x = nuclear_ball_point(rng, 4, 3, radius);
    const Matrix y = nuclear_ball_point(rng, 4, 3, radius);
    const double lower =
        p.alpha / (2.0 * (radius + 3 * p.beta)) * std::pow(nuclear_norm(x - y), 2);
    worst = std::max(worst, lower - spectral_bregman(x, y, p));
  }
  return check("spectral strong convexity (nuclear)", worst, 1e-9, n);
}

PropertyResult bregman_upper(Rng& rng) {
  const double radius = 3.0;
  const int d = 8;
  const EntropyParams p{1.0, 1.0 / d};
  const double bound = 4.0 * radius * (std::log(radius + 1.0) + std::log(double(d)));
  double worst = 0.0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = ball_point(rng, d, radius);
    const Vector y = ball_point(rng, d, radius);
    worst = std::max(worst, bregman(x, y, p) - bound);
  }
  return check("bregman diameter bound", worst, 1e-9, n);
}

PropertyResult log_sum_bounds(Rng& rng) {
  double worst = 0.0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto len = 1 + rng.below(50);
    double prefix = 0.0, ratio_sum = 0.0, sqrt_sum = 0.0;
    for (std::uint64_t k = 0; k < len; ++k) {
      const double a = std::exp(rng.uniform(-5.0, 5.0));
      prefix += a;
      ratio_sum += a / (prefix + 1.0);
      sqrt_sum += a / std::sqrt(prefix);
    }
    const double root = std::sqrt(prefix);
    worst = std::max({worst, ratio_sum - std::log1p(prefix), root - sqrt_sum,
                      sqrt_sum - 2.0 * root});
  }
  return check("log-sum bounds", worst, 1e-12, n);
}

PropertyResult prox_stationarity(Rng& rng) {
  double worst = 0.0;
  const std::size_t n = 500;
  const double gamma2s[] = {0.0, 0.1, 10.0};
  for (std::size_t i = 0; i < n; ++i) {
    const EntropyParams p{std::exp(rng.uniform(-2.0, 2.0)), std::exp(rng.uniform(-5.0, 0.0))};
    const CompositeRegularizer r{rng.uniform(0.0, 1.0), gamma2s[i % 3]};
    const double level = rng.uniform(0.0, r.gamma2 > 0.0 ? 900.0 : 40.0);
    const double m = elastic_net_magnitude(level, r, p);
    double res = 0.0;
    if (m > 0.0) {
      res = std::abs(std::log1p(m / p.beta) + (r.gamma1 + r.gamma2 * m) / p.alpha - level) /
            std::max(1.0, level);
    } else {
      res = std::max(0.0, level - r.gamma1 / p.alpha);
    }
    worst = std::max(worst, res);
  }
  return check("elastic-net prox stationarity", worst, 1e-9, n);
}

PropertyResult projection_kkt(Rng& rng) {
  double worst = 0.0;
  const std::size_t n = 200;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<Eigen::Index>(2 + rng.below(6));
    const EntropyParams p{1.0, 1.0 / static_cast<double>(d)};
    const double radius = rng.uniform(0.1, 2.0);
    Vector y = rng.uniform_vector(d, -3.0, 3.0);
    if (y.lpNorm<1>() <= radius) y *= 2.0 * radius / y.lpNorm<1>();
    const Vector x = l1_ball_project(y, {radius}, p);
    worst = std::max(worst, std::abs(x.lpNorm<1>() - radius));
    // Active coordinates share one dual shift; inactive ones sit below it.
    double shift = -1.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (x[j] == 0.0) continue;
      worst = std::max(worst, x[j] * y[j] < 0.0 ? 1.0 : 0.0);
      const double s = std::log1p(std::abs(y[j]) / p.beta) - std::log1p(std::abs(x[j]) / p.beta);
      if (shift < 0.0) shift = s;
      worst = std::max(worst, std::abs(s - shift));
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      if (x[j] != 0.0) continue;
      worst = std::max(worst, std::log1p(std::abs(y[j]) / p.beta) - shift);
    }
  }
  return check("l1-ball projection optimality", worst, 1e-10, n);
}

PropertyResult nuclear_consistency(Rng& rng) {
  double worst = 0.0;
  const std::size_t n = 100;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix y = rng.normal_matrix(5, 4);
    const EntropyParams p{1.0, 0.25};
    const BallConstraint c{0.5 * nuclear_norm(y)};
    const Vector expected = l1_ball_project(singular_values(y), c, p);
    Vector got = singular_values(nuclear_ball_project(y, c, p));
    worst = std::max(worst, (got - expected).cwiseAbs().maxCoeff());
  }
  return check("nuclear projection consistency", worst, 1e-8, n);
}

PropertyResult estimator_evaluations(Rng& rng) {
  double worst = 0.0;
  const std::size_t n = 20;
  for (std::size_t b = 1; b <= n; ++b) {
    std::size_t calls = 0;
    const Objective f = [&calls](const Vector& x) {
      ++calls;
      return x.sum();
    };
    EstimatorConfig cfg = EstimatorConfig::rademacher(10, 100, b);
    two_point_grad(f, Vector::Zero(10), cfg, rng);
    worst = std::max(worst, std::abs(double(calls) - double(b + 1)));
  }
  return check("estimator evaluation count", worst, 0.0, n);
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  std::uint64_t tag = 0;
  auto next = [&] { return Rng(Rng::derive(seed, ++tag)); };
  Rng r1 = next(), r2 = next(), r3 = next(), r4 = next(), r5 = next(), r6 = next(),
      r7 = next(), r8 = next(), r9 = next();
  out.push_back(mirror_inverse(r1));
  out.push_back(strong_convexity(r2));
  out.push_back(spectral_strong_convexity(r3));
  out.push_back(bregman_upper(r4));
  out.push_back(log_sum_bounds(r5));
  out.push_back(prox_stationarity(r6));
  out.push_back(projection_kkt(r7));
  out.push_back(nuclear_consistency(r8));
  out.push_back(estimator_evaluations(r9));
  return out;
}

}  // namespace expo
