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

// Spectral counterparts of the vector learners: Psi = psi o sigma acting on
// m x n matrices. Every map acts on singular values and keeps the singular
// vectors, so each learner step needs exactly one SVD (of the dual matrix).

#ifndef EXPO_SPECTRAL_HPP_
#define EXPO_SPECTRAL_HPP_

#include <cstddef>

#include "expo/entropy.hpp"
#include "expo/learners.hpp"
#include "expo/prox.hpp"

namespace expo {

struct SvdFactors {
  Matrix u;   // m x k
  Vector s;   // k = min(m, n), descending, >= 0
  Matrix vt;  // k x n

  Matrix reconstruct() const;
  // U diag(values) V^T with the stored singular vectors.
  Matrix with_values(const Vector& values) const;
};

// Thin SVD. Throws DomainError on non-finite input and NumericRangeError if
// the factorization does not reproduce the input.
SvdFactors svd(const Matrix& x);
Vector singular_values(const Matrix& x);

double spectral_norm(const Matrix& x);
double nuclear_norm(const Matrix& x);

double spectral_psi_value(const Matrix& x, const EntropyParams& p);
// U diag(grad psi(sigma(X))) V^T
Matrix spectral_psi_grad(const Matrix& x, const EntropyParams& p);
double spectral_bregman(const Matrix& x, const Matrix& y, const EntropyParams& p);

Matrix spectral_prox(const Matrix& y, const CompositeRegularizer& r,
                     const EntropyParams& p);
// Requires nuclear_norm(y) > D.
Matrix nuclear_ball_project(const Matrix& y, const BallConstraint& c,
                            const EntropyParams& p);
Matrix nuclear_project_or_pass(const Matrix& y, const BallConstraint& c,
                               const EntropyParams& p);

struct SpectralSchedule {
  std::size_t m = 1;
  std::size_t n = 1;
  double radius = 1.0;
  double eta = 1.0;
  double beta = 1.0;
  double epsilon0 = 1e-12;

  // beta = 1/min(m, n), eta = 1/sqrt(ln(D + 1) + ln min(m, n)).
  static SpectralSchedule defaults(std::size_t m, std::size_t n, double radius);

  double alpha(double sum_sq) const;
  void validate() const;
};

struct SpectralOmdState {
  SvdFactors x_factors;  // factors of x_t
  Matrix x;
  double sum_sq = 0.0;   // sum of squared spectral norms of g_s - h_s
  Matrix h_prev;
  long round = 1;
  double alpha = 0.0;
};

struct SpectralFtrlState {
  Matrix g_accum;
  Matrix theta1;  // grad Psi(x1) / alpha
  double sum_sq = 0.0;
  Matrix h_prev;
  long round = 1;
  double reg_weight_sum = 1.0;
  Matrix x;
  double alpha = 0.0;
};

SpectralOmdState spectral_omd_init(const Matrix& x1);
SpectralFtrlState spectral_ftrl_init(const Matrix& x1, double beta);

SpectralOmdState spectral_omd_step(const SpectralOmdState& state, const Matrix& g,
                                   const Matrix& h_next, const FeasibleMode& mode,
                                   const SpectralSchedule& sched,
                                   double reg_weight = 1.0);
SpectralFtrlState spectral_ftrl_step(const SpectralFtrlState& state,
                                     const Matrix& g, const Matrix& h_next,
                                     const FeasibleMode& mode,
                                     const SpectralSchedule& sched,
                                     double reg_weight = 1.0);

class SpectralExpOmd {
 public:
  SpectralExpOmd(const SpectralSchedule& sched, FeasibleMode mode, const Matrix& x1);
  SpectralExpOmd(const SpectralSchedule& sched, FeasibleMode mode);

  const Matrix& x() const { return state_.x; }
  const SpectralOmdState& state() const { return state_; }
  void update(const Matrix& g, const Matrix& h_next, double reg_weight = 1.0);
  void update(const Matrix& g) { update(g, Matrix::Zero(g.rows(), g.cols())); }

 private:
  SpectralSchedule sched_;
  FeasibleMode mode_;
  SpectralOmdState state_;
};

class SpectralExpFtrl {
 public:
  SpectralExpFtrl(const SpectralSchedule& sched, FeasibleMode mode, const Matrix& x1);
  SpectralExpFtrl(const SpectralSchedule& sched, FeasibleMode mode);

  const Matrix& x() const { return state_.x; }
  const SpectralFtrlState& state() const { return state_; }
  void update(const Matrix& g, const Matrix& h_next, double reg_weight = 1.0);
  void update(const Matrix& g) { update(g, Matrix::Zero(g.rows(), g.cols())); }

 private:
  SpectralSchedule sched_;
  FeasibleMode mode_;
  SpectralFtrlState state_;
};

}  // namespace expo

#endif  // EXPO_SPECTRAL_HPP_
