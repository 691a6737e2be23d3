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

#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "expo/learners.hpp"
#include "expo/rng.hpp"

namespace expo {
namespace {

Matrix diag_matrix(const Vector& d, Eigen::Index m, Eigen::Index n) {
  Matrix x = Matrix::Zero(m, n);
  for (Eigen::Index i = 0; i < d.size(); ++i) x(i, i) = d[i];
  return x;
}

// Uniform-ish point in the nuclear ball: random factors, singular values
// drawn from the l1 ball.
Matrix nuclear_ball_point(Rng& rng, Eigen::Index m, Eigen::Index n, double radius) {
  const Eigen::Index k = std::min(m, n);
  Vector e(k);
  for (Eigen::Index i = 0; i < k; ++i) e[i] = -std::log(1.0 - rng.uniform());
  e *= radius * std::pow(rng.uniform(), 1.0 / double(k)) / e.sum();
  return rng.orthogonal(m).leftCols(k) * e.asDiagonal() * rng.orthogonal(n).topRows(k);
}

TEST(Svd, SimpleMatrices) {
  EXPECT_LT((singular_values(Matrix::Identity(3, 3)) - Vector::Ones(3)).norm(), 1e-15);
  const Matrix d = diag_matrix(Vector{{1.0, 3.0, 2.0}}, 3, 3);
  const SvdFactors f = svd(d);
  EXPECT_LT((f.s - Vector{{3.0, 2.0, 1.0}}).norm(), 1e-14);
  EXPECT_LT((f.u.cwiseAbs() * f.vt.cwiseAbs() - Matrix::Identity(3, 3)).norm(), 1e-14);
}

TEST(Svd, ReconstructsRandomMatrices) {
  Rng rng(1);
  for (auto [m, n] : {std::pair{5, 3}, std::pair{3, 5}, std::pair{4, 4}, std::pair{1, 6}}) {
    const Matrix x = rng.normal_matrix(m, n);
    const SvdFactors f = svd(x);
    EXPECT_LE((f.reconstruct() - x).norm(), 1e-10 * x.norm());
    EXPECT_EQ(f.s.size(), std::min(m, n));
    for (Eigen::Index i = 0; i + 1 < f.s.size(); ++i) EXPECT_GE(f.s[i], f.s[i + 1]);
    EXPECT_GE(f.s.minCoeff(), 0.0);
    EXPECT_LT((f.u.transpose() * f.u - Matrix::Identity(f.s.size(), f.s.size())).norm(), 1e-12);
  }
}

TEST(Svd, Norms) {
  const Matrix x = diag_matrix(Vector{{-4.0, 1.0}}, 3, 2);
  EXPECT_NEAR(spectral_norm(x), 4.0, 1e-14);
  EXPECT_NEAR(nuclear_norm(x), 5.0, 1e-14);
}

TEST(SpectralPsi, SymmetricMatchesEigenvalues) {
  Rng rng(2);
  const EntropyParams p{1.3, 0.25};
  for (int i = 0; i < 50; ++i) {
    const Matrix a = rng.normal_matrix(4, 4);
    const Matrix s = a + a.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
    double expected = 0.0;
    for (Eigen::Index j = 0; j < 4; ++j) expected += phi(eig.eigenvalues()[j], p);
    EXPECT_NEAR(spectral_psi_value(s, p), expected, 1e-10 * std::max(1.0, expected));
  }
}

TEST(SpectralPsi, GradientMatchesFiniteDifferences) {
  Rng rng(3);
  const EntropyParams p{0.8, 0.3};
  for (int i = 0; i < 40; ++i) {
    const Matrix x = rng.normal_matrix(4, 3);
    const Matrix dir = rng.normal_matrix(4, 3);
    const double h = 1e-6;
    const double fd = (spectral_psi_value(x + h * dir, p) - spectral_psi_value(x - h * dir, p)) / (2 * h);
    EXPECT_NEAR((spectral_psi_grad(x, p).array() * dir.array()).sum(), fd, 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

TEST(SpectralPsi, StrongConvexityOnNuclearBall) {
  Rng rng(4);
  const double radius = 2.0;
  const EntropyParams p{1.0, 1.0 / 3.0};
  for (int i = 0; i < 200; ++i) {
    const Matrix x = nuclear_ball_point(rng, 4, 3, radius), y = nuclear_ball_point(rng, 4, 3, radius);
    const double lower = p.alpha / (2 * (radius + 3 * p.beta)) * std::pow(nuclear_norm(x - y), 2);
    EXPECT_GE(spectral_bregman(x, y, p), lower - 1e-9);
  }
}

TEST(SpectralProx, DiagonalReduction) {
  Rng rng(5);
  const EntropyParams p{1.0, 0.25};
  const CompositeRegularizer r{0.2, 0.3};
  const Vector d = rng.uniform_vector(4, 0.0, 5.0);
  const Matrix out = spectral_prox(diag_matrix(d, 4, 4), r, p);
  EXPECT_LT((out - diag_matrix(elastic_net_prox(d, r, p), 4, 4)).norm(), 1e-12);
}

TEST(SpectralProx, LargeL1GivesZero) {
  Rng rng(6);
  const Matrix y = rng.normal_matrix(4, 4);
  const EntropyParams p{1.0, 0.25};
  const double g1 = 1.01 * std::log1p(spectral_norm(y) / p.beta);
  EXPECT_TRUE(spectral_prox(y, {g1, 0.0}, p).isZero());
}

TEST(SpectralProx, SingularValueStationarity) {
  Rng rng(7);
  const EntropyParams p{1.0, 0.25};
  const CompositeRegularizer r{0.1, 0.3};
  for (int i = 0; i < 20; ++i) {
    const Matrix y = 3.0 * rng.normal_matrix(4, 4);
    const Vector sy = singular_values(y);
    const Vector sx = singular_values(spectral_prox(y, r, p));
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double level = std::log1p(sy[j] / p.beta);
      if (sx[j] > 1e-12) {
        const double res = std::log1p(sx[j] / p.beta) + (r.gamma1 + r.gamma2 * sx[j]) / p.alpha - level;
        EXPECT_LE(std::abs(res), 1e-8);
      } else {
        EXPECT_LE(level, r.gamma1 / p.alpha + 1e-12);
      }
    }
  }
}

TEST(SpectralProx, UnitaryInvariance) {
  Rng rng(8);
  const EntropyParams p{1.0, 0.2};
  const CompositeRegularizer r{0.1, 0.2};
  for (int i = 0; i < 20; ++i) {
    const Matrix y = rng.normal_matrix(5, 4);
    const Matrix q1 = rng.orthogonal(5), q2 = rng.orthogonal(4);
    const Matrix lhs = spectral_prox(q1 * y * q2, r, p);
    const Matrix rhs = q1 * spectral_prox(y, r, p) * q2;
    EXPECT_LT((lhs - rhs).norm(), 1e-8);
  }
}

TEST(NuclearBall, Examples) {
  const EntropyParams p{1.0, 1.0 / 3.0};
  const Matrix y = diag_matrix(Vector{{5.0, 0.0, 0.0}}, 3, 3);
  EXPECT_LT((nuclear_ball_project(y, {2.0}, p) - diag_matrix(Vector{{2.0, 0.0, 0.0}}, 3, 3)).norm(), 1e-12);
  const Matrix small = diag_matrix(Vector{{0.5, 0.2, 0.0}}, 3, 3);
  EXPECT_EQ(nuclear_project_or_pass(small, {2.0}, p), small);
}

TEST(NuclearBall, MatchesVectorProjectionOfSpectrum) {
  Rng rng(9);
  const EntropyParams p{1.0, 1.0 / 3.0};
  for (int i = 0; i < 100; ++i) {
    const Matrix y = rng.normal_matrix(4, 3);
    const double radius = nuclear_norm(y) / 3.0;
    const Matrix x = nuclear_ball_project(y, {radius}, p);
    const Vector expected = l1_ball_project(singular_values(y), {radius}, p);
    EXPECT_LT((singular_values(x) - expected).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_NEAR(nuclear_norm(x), radius, 1e-8);
  }
}

TEST(SpectralLearners, DiagonalStreamMatchesVectorLearner) {
  Rng rng(10);
  const std::size_t k = 4;
  const SpectralSchedule ss = SpectralSchedule::defaults(k, k, 2.0);
  const ScheduleParams vs = ScheduleParams::defaults(k, 2.0);
  SpectralExpOmd somd(ss, BallConstraint{2.0});
  SpectralExpFtrl sftrl(ss, CompositeRegularizer{0.01, 0.02});
  ExpOmd vomd(vs, BallConstraint{2.0});
  ExpFtrl vftrl(vs, CompositeRegularizer{0.01, 0.02});
  for (int t = 0; t < 100; ++t) {
    const Vector g = rng.uniform_vector(k, -1, 1);
    const Matrix gm = diag_matrix(g, k, k);
    somd.update(gm);
    sftrl.update(gm);
    vomd.update(g);
    vftrl.update(g);
    ASSERT_LT((somd.x() - diag_matrix(vomd.x(), k, k)).norm(), 1e-9) << t;
    ASSERT_LT((sftrl.x() - diag_matrix(vftrl.x(), k, k)).norm(), 1e-9) << t;
  }
}

TEST(SpectralLearners, PerfectHintIsFixedPoint) {
  Rng rng(11);
  const SpectralSchedule s = SpectralSchedule::defaults(3, 2, 1.0);
  SpectralOmdState st = spectral_omd_init(Matrix::Zero(3, 2));
  st = spectral_omd_step(st, rng.normal_matrix(3, 2), rng.normal_matrix(3, 2), FreeMode{}, s);
  const Matrix x = st.x;
  st = spectral_omd_step(st, st.h_prev, Matrix::Zero(3, 2), FreeMode{}, s);
  EXPECT_LT((st.x - x).norm(), 1e-12);
}

TEST(SpectralLearners, SpectralNormInSumSq) {
  Rng rng(12);
  const SpectralSchedule s = SpectralSchedule::defaults(3, 3, 1.0);
  const Matrix g = rng.normal_matrix(3, 3);
  const SpectralFtrlState st =
      spectral_ftrl_step(spectral_ftrl_init(Matrix::Zero(3, 3), s.beta), g, Matrix::Zero(3, 3),
                         BallConstraint{1.0}, s);
  EXPECT_NEAR(st.sum_sq, std::pow(spectral_norm(g), 2), 1e-12);
  EXPECT_LE(nuclear_norm(st.x), 1.0 + 1e-10);
}

TEST(SpectralLearners, BallFeasibility) {
  Rng rng(13);
  SpectralExpOmd learner(SpectralSchedule::defaults(5, 3, 1.5), BallConstraint{1.5});
  for (int t = 0; t < 300; ++t) {
    learner.update(3.0 * rng.normal_matrix(5, 3));
    ASSERT_LE(nuclear_norm(learner.x()), 1.5 + 1e-9);
  }
}

}  // namespace
}  // namespace expo
