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

#include "expo/zeroth_order.hpp"

#include <cmath>

#include "expo/errors.hpp"

namespace expo {

void EstimatorConfig::validate() const {
  if (!(mu > 0.0)) throw DomainError("EstimatorConfig: mu must be positive");
  if (!(delta > 0.0)) throw DomainError("EstimatorConfig: delta must be positive");
  if (batch < 1) throw DomainError("EstimatorConfig: batch must be >= 1");
}

double EstimatorConfig::default_mu(std::size_t dim, std::size_t horizon) {
  return 1.0 / std::sqrt(static_cast<double>(dim) * static_cast<double>(horizon));
}

EstimatorConfig EstimatorConfig::rademacher(std::size_t dim, std::size_t horizon,
                                            std::size_t batch) {
  return {1.0, default_mu(dim, horizon), batch, DirectionLaw::kRademacher};
}

EstimatorConfig EstimatorConfig::unit_sphere(std::size_t dim, std::size_t horizon,
                                             std::size_t batch) {
  return {static_cast<double>(dim), default_mu(dim, horizon), batch,
          DirectionLaw::kUnitSphere};
}

Vector sample_direction(Eigen::Index dim, DirectionLaw law, Rng& rng) {
  Vector v(dim);
  if (law == DirectionLaw::kRademacher) {
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = rng.rademacher();
    return v;
  }
  double norm = 0.0;
  do {
    v = rng.normal_vector(dim);
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

Vector two_point_grad(const Objective& f, const Vector& x,
                      const EstimatorConfig& cfg, Rng& rng) {
  cfg.validate();
  const double fx = f(x);
  Vector est = Vector::Zero(x.size());
  for (std::size_t i = 0; i < cfg.batch; ++i) {
    const Vector v = sample_direction(x.size(), cfg.law, rng);
    est += (cfg.delta / cfg.mu) * (f(x + cfg.mu * v) - fx) * v;
  }
  return est / static_cast<double>(cfg.batch);
}

}  // namespace expo
