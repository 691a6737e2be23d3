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

// Synthetic data for the benchmark experiments.

#ifndef EXPO_STREAMS_HPP_
#define EXPO_STREAMS_HPP_

#include <cstddef>

#include "expo/entropy.hpp"
#include "expo/experiment.hpp"
#include "expo/rng.hpp"

namespace expo {

// ln(1 + exp(-y <w, x>)) and its gradient in w.
double logistic_loss(const Vector& w, const Vector& x, double y);
Vector logistic_grad(const Vector& w, const Vector& x, double y);

// Number of nonzeros ceil((1 - sparsity) d), robust to rounding of the
// product (0.01 * 100 is 1, not 2).
std::size_t support_size(double sparsity, std::size_t dim);

struct LogisticSample {
  Vector x;
  double y = 1.0;
};

// Sparse w* with nonzeros uniform on [-1, 1]; features uniform on
// [-1, 1]^d; labels from P[y = 1] = 1 / (1 + exp(-<w*, x>)).
class LogisticStream {
 public:
  LogisticStream(const ExperimentSpec& spec, Rng& rng);

  const Vector& w_star() const { return w_star_; }
  LogisticSample next();

 private:
  Vector w_star_;
  Rng data_;
};

struct MultitaskSample {
  Matrix x;  // d x k, column i is the feature of task i
  Vector y;  // k labels
};

// Sum over tasks of the logistic loss of column i of W.
double multitask_loss(const Matrix& w, const MultitaskSample& s);
Matrix multitask_grad(const Matrix& w, const MultitaskSample& s);

// W* = U diag(sigma) V (d x k) with orthogonal U, V and r nonzero singular
// values uniform on [0, 10]. Task i uses column i of W.
class MultitaskStream {
 public:
  MultitaskStream(const ExperimentSpec& spec, Rng& rng);

  const Matrix& w_star() const { return w_star_; }
  const Vector& sigma() const { return sigma_; }
  MultitaskSample next();

 private:
  Matrix w_star_;
  Vector sigma_;
  Rng data_;
};

// Composite objective F(x) = max(q_1(x), q_2(x)) + g1 |x|_1 + g2/2 |x|_2^2
// with convex separable quadratics q_k(x) = 1/2 sum_j s_kj (x_j - c_kj)^2.
class BlackboxProblem {
 public:
  BlackboxProblem(const ExperimentSpec& spec, Rng& rng);

  double smooth_part(const Vector& x) const;  // the black-box max of quadratics
  double objective(const Vector& x) const;
  std::size_t dim() const { return static_cast<std::size_t>(center_[0].size()); }

 private:
  Vector center_[2];
  Vector scale_[2];
  double gamma1_;
  double gamma2_;
};

}  // namespace expo

#endif  // EXPO_STREAMS_HPP_
