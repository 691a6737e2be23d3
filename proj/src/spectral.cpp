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

#include "expo/spectral.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "expo/errors.hpp"

namespace expo {
namespace {

void check_shape(const char* where, const Matrix& expected, const Matrix& got) {
  check_dim(where, static_cast<std::size_t>(expected.rows()),
            static_cast<std::size_t>(got.rows()));
  check_dim(where, static_cast<std::size_t>(expected.cols()),
            static_cast<std::size_t>(got.cols()));
}

Vector log_levels(const Vector& s, double beta) {
  return s.unaryExpr([beta](double v) { return std::log1p(v / beta); });
}

}  // namespace

Matrix SvdFactors::reconstruct() const { return with_values(s); }

Matrix SvdFactors::with_values(const Vector& values) const {
  return u * values.asDiagonal() * vt;
}

SvdFactors svd(const Matrix& x) {
  if (!x.allFinite()) throw DomainError("svd: non-finite input");
  Eigen::JacobiSVD<Matrix> solver(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw NumericRangeError("svd: factorization did not converge");
  }
  SvdFactors f;
  f.u = solver.matrixU();
  f.s = solver.singularValues();
  f.vt = solver.matrixV().transpose();
  if (!f.u.allFinite() || !f.vt.allFinite() || !f.s.allFinite()) {
    throw NumericRangeError("svd: non-finite factors");
  }
  return f;
}

Vector singular_values(const Matrix& x) {
  if (!x.allFinite()) throw DomainError("singular_values: non-finite input");
  Eigen::JacobiSVD<Matrix> solver(x);
  return solver.singularValues();
}

double spectral_norm(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  return singular_values(x)[0];
}

double nuclear_norm(const Matrix& x) { return singular_values(x).sum(); }

double spectral_psi_value(const Matrix& x, const EntropyParams& p) {
  return psi_value(singular_values(x), p);
}

Matrix spectral_psi_grad(const Matrix& x, const EntropyParams& p) {
  const SvdFactors f = svd(x);
  return f.with_values(psi_grad(f.s, p));
}

double spectral_bregman(const Matrix& x, const Matrix& y, const EntropyParams& p) {
  check_shape("spectral_bregman", x, y);
  return spectral_psi_value(x, p) - spectral_psi_value(y, p) -
         (spectral_psi_grad(y, p).array() * (x - y).array()).sum();
}

Matrix spectral_prox(const Matrix& y, const CompositeRegularizer& r,
                     const EntropyParams& p) {
  const SvdFactors f = svd(y);
  return f.with_values(elastic_net_prox(f.s, r, p));
}

Matrix nuclear_ball_project(const Matrix& y, const BallConstraint& c,
                            const EntropyParams& p) {
  const SvdFactors f = svd(y);
  return f.with_values(l1_ball_project(f.s, c, p));
}

Matrix nuclear_project_or_pass(const Matrix& y, const BallConstraint& c,
                               const EntropyParams& p) {
  const SvdFactors f = svd(y);
  if (f.s.sum() <= c.radius) return y;
  return f.with_values(l1_ball_project(f.s, c, p));
}

SpectralSchedule SpectralSchedule::defaults(std::size_t m, std::size_t n,
                                            double radius) {
  SpectralSchedule s;
  s.m = m;
  s.n = n;
  s.radius = radius;
  const double k = static_cast<double>(std::min(m, n));
  s.beta = 1.0 / k;
  s.eta = std::sqrt(1.0 / (std::log(radius + 1.0) + std::log(k)));
  return s;
}

double SpectralSchedule::alpha(double sum_sq) const {
  return eta * std::sqrt(epsilon0 + sum_sq);
}

void SpectralSchedule::validate() const {
  if (m == 0 || n == 0) throw DomainError("SpectralSchedule: empty shape");
  if (!(radius > 0.0)) throw DomainError("SpectralSchedule: radius must be positive");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("SpectralSchedule: eta must be positive");
  }
  if (!(beta > 0.0)) throw DomainError("SpectralSchedule: beta must be positive");
  if (!(epsilon0 >= 0.0)) throw DomainError("SpectralSchedule: epsilon0 must be >= 0");
}

SpectralOmdState spectral_omd_init(const Matrix& x1) {
  SpectralOmdState s;
  s.x_factors = svd(x1);
  s.x = x1;
  s.h_prev = Matrix::Zero(x1.rows(), x1.cols());
  return s;
}

SpectralFtrlState spectral_ftrl_init(const Matrix& x1, double beta) {
  SpectralFtrlState s;
  s.theta1 = spectral_psi_grad(x1, EntropyParams{1.0, beta});
  s.x = x1;
  s.g_accum = Matrix::Zero(x1.rows(), x1.cols());
  s.h_prev = Matrix::Zero(x1.rows(), x1.cols());
  return s;
}

SpectralOmdState spectral_omd_step(const SpectralOmdState& state, const Matrix& g,
                                   const Matrix& h_next, const FeasibleMode& mode,
                                   const SpectralSchedule& sched,
                                   double reg_weight) {
  check_shape("spectral_omd_step(g)", state.x, g);
  check_shape("spectral_omd_step(h_next)", state.x, h_next);

  SpectralOmdState next;
  next.sum_sq = state.sum_sq + std::pow(spectral_norm(g - state.h_prev), 2);
  const EntropyParams p{sched.alpha(next.sum_sq), sched.beta};
  p.validate();

  const Matrix dual =
      state.x_factors.with_values(log_levels(state.x_factors.s, sched.beta)) -
      (g - state.h_prev + h_next) / p.alpha;
  SvdFactors f = svd(dual);
  // The unit dual singular values are ln(sigma(y)/beta + 1) >= 0; every mode
  // maps them monotonically, so the descending order is kept.
  f.s = resolve_mode(f.s, mode, p, reg_weight);
  next.x = f.reconstruct();
  next.x_factors = std::move(f);
  next.h_prev = h_next;
  next.round = state.round + 1;
  next.alpha = p.alpha;
  return next;
}

SpectralFtrlState spectral_ftrl_step(const SpectralFtrlState& state,
                                     const Matrix& g, const Matrix& h_next,
                                     const FeasibleMode& mode,
                                     const SpectralSchedule& sched,
                                     double reg_weight) {
  check_shape("spectral_ftrl_step(g)", state.x, g);
  check_shape("spectral_ftrl_step(h_next)", state.x, h_next);

  SpectralFtrlState next = state;
  next.g_accum = state.g_accum + g;
  next.sum_sq = state.sum_sq + std::pow(spectral_norm(g - state.h_prev), 2);
  next.reg_weight_sum = state.reg_weight_sum + reg_weight;
  const EntropyParams p{sched.alpha(next.sum_sq), sched.beta};
  p.validate();

  const Matrix dual = state.theta1 - (next.g_accum + h_next) / p.alpha;
  SvdFactors f = svd(dual);
  f.s = resolve_mode(f.s, mode, p, next.reg_weight_sum);
  next.x = f.reconstruct();
  next.h_prev = h_next;
  next.round = state.round + 1;
  next.alpha = p.alpha;
  return next;
}

SpectralExpOmd::SpectralExpOmd(const SpectralSchedule& sched, FeasibleMode mode,
                               const Matrix& x1)
    : sched_(sched), mode_(std::move(mode)), state_(spectral_omd_init(x1)) {
  sched_.validate();
  check_dim("SpectralExpOmd(rows)", sched_.m, static_cast<std::size_t>(x1.rows()));
  check_dim("SpectralExpOmd(cols)", sched_.n, static_cast<std::size_t>(x1.cols()));
}

SpectralExpOmd::SpectralExpOmd(const SpectralSchedule& sched, FeasibleMode mode)
    : SpectralExpOmd(sched, std::move(mode),
                     Matrix::Zero(static_cast<Eigen::Index>(sched.m),
                                  static_cast<Eigen::Index>(sched.n))) {}

void SpectralExpOmd::update(const Matrix& g, const Matrix& h_next, double reg_weight) {
  state_ = spectral_omd_step(state_, g, h_next, mode_, sched_, reg_weight);
}

SpectralExpFtrl::SpectralExpFtrl(const SpectralSchedule& sched, FeasibleMode mode,
                                 const Matrix& x1)
    : sched_(sched), mode_(std::move(mode)), state_(spectral_ftrl_init(x1, sched.beta)) {
  sched_.validate();
  check_dim("SpectralExpFtrl(rows)", sched_.m, static_cast<std::size_t>(x1.rows()));
  check_dim("SpectralExpFtrl(cols)", sched_.n, static_cast<std::size_t>(x1.cols()));
}

SpectralExpFtrl::SpectralExpFtrl(const SpectralSchedule& sched, FeasibleMode mode)
    : SpectralExpFtrl(sched, std::move(mode),
                      Matrix::Zero(static_cast<Eigen::Index>(sched.m),
                                   static_cast<Eigen::Index>(sched.n))) {}

void SpectralExpFtrl::update(const Matrix& g, const Matrix& h_next, double reg_weight) {
  state_ = spectral_ftrl_step(state_, g, h_next, mode_, sched_, reg_weight);
}

}  // namespace expo
