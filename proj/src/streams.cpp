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

#include "expo/streams.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace expo {
namespace {

// ln(1 + exp(-m)) without overflow.
double softplus_neg(double m) {
  return m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

// 1 / (1 + exp(m))
double sigmoid_neg(double m) {
  if (m >= 0.0) {
    const double e = std::exp(-m);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(m));
}

}  // namespace

double logistic_loss(const Vector& w, const Vector& x, double y) {
  return softplus_neg(y * w.dot(x));
}

Vector logistic_grad(const Vector& w, const Vector& x, double y) {
  return (-y * sigmoid_neg(y * w.dot(x))) * x;
}

std::size_t support_size(double sparsity, std::size_t dim) {
  const double raw = (1.0 - sparsity) * static_cast<double>(dim);
  const double nearest = std::round(raw);
  const double n = std::abs(raw - nearest) < 1e-9 * std::max(1.0, raw) ? nearest
                                                                        : std::ceil(raw);
  return std::min(dim, static_cast<std::size_t>(std::max(0.0, n)));
}

LogisticStream::LogisticStream(const ExperimentSpec& spec, Rng& rng)
    : w_star_(Vector::Zero(static_cast<Eigen::Index>(spec.dim))), data_(0) {
  const std::size_t d = spec.dim;
  const std::size_t nnz = support_size(spec.sparsity, d);
  // Partial Fisher-Yates for the support.
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < nnz; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(d - i));
    std::swap(idx[i], idx[j]);
    w_star_[static_cast<Eigen::Index>(idx[i])] = rng.uniform(-1.0, 1.0);
  }
  data_ = Rng(rng.next_u64());
}

LogisticSample LogisticStream::next() {
  LogisticSample s;
  s.x = data_.uniform_vector(w_star_.size(), -1.0, 1.0);
  const double p_pos = sigmoid_neg(-w_star_.dot(s.x));
  s.y = data_.bernoulli(p_pos) ? 1.0 : -1.0;
  return s;
}

double multitask_loss(const Matrix& w, const MultitaskSample& s) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < w.cols(); ++i) {
    sum += softplus_neg(s.y[i] * w.col(i).dot(s.x.col(i)));
  }
  return sum;
}

Matrix multitask_grad(const Matrix& w, const MultitaskSample& s) {
  Matrix g(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.cols(); ++i) {
    g.col(i) = (-s.y[i] * sigmoid_neg(s.y[i] * w.col(i).dot(s.x.col(i)))) * s.x.col(i);
  }
  return g;
}

MultitaskStream::MultitaskStream(const ExperimentSpec& spec, Rng& rng) : data_(0) {
  const auto d = static_cast<Eigen::Index>(spec.dim);
  const auto k = static_cast<Eigen::Index>(spec.tasks);
  const auto r = static_cast<Eigen::Index>(spec.rank);
  sigma_ = Vector::Zero(std::min(d, k));
  for (Eigen::Index i = 0; i < r; ++i) sigma_[i] = rng.uniform(0.0, 10.0);
  const Matrix u = rng.orthogonal(d);
  const Matrix v = rng.orthogonal(k);
  Matrix diag = Matrix::Zero(d, k);
  for (Eigen::Index i = 0; i < sigma_.size(); ++i) diag(i, i) = sigma_[i];
  w_star_ = u * diag * v;
  data_ = Rng(rng.next_u64());
}

MultitaskSample MultitaskStream::next() {
  MultitaskSample s;
  const Eigen::Index d = w_star_.rows();
  const Eigen::Index k = w_star_.cols();
  s.x.resize(d, k);
  s.y.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    s.x.col(i) = data_.uniform_vector(d, -1.0, 1.0);
    const double p_pos = sigmoid_neg(-w_star_.col(i).dot(s.x.col(i)));
    s.y[i] = data_.bernoulli(p_pos) ? 1.0 : -1.0;
  }
  return s;
}

BlackboxProblem::BlackboxProblem(const ExperimentSpec& spec, Rng& rng)
    : gamma1_(spec.gamma1), gamma2_(spec.gamma2) {
  const auto d = static_cast<Eigen::Index>(spec.dim);
  for (int k = 0; k < 2; ++k) {
    center_[k] = Vector::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      if (rng.bernoulli(0.2)) center_[k][j] = rng.uniform(-1.0, 1.0);
    }
    scale_[k] = rng.uniform_vector(d, 0.5, 2.0);
  }
}

double BlackboxProblem::smooth_part(const Vector& x) const {
  double q[2];
  for (int k = 0; k < 2; ++k) {
    q[k] = 0.5 * (scale_[k].array() * (x - center_[k]).array().square()).sum();
  }
  return std::max(q[0], q[1]);
}

double BlackboxProblem::objective(const Vector& x) const {
  return smooth_part(x) + gamma1_ * x.lpNorm<1>() + 0.5 * gamma2_ * x.squaredNorm();
}

}  // namespace expo
