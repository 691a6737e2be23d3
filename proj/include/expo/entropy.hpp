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

// Generalized entropy
//
//   phi(x) = alpha * ((|x| + beta) * ln(|x|/beta + 1) - |x|)
//
// its derivatives, its convex conjugate, and the separable regularizer
// psi(x) = sum_i phi(x_i) with the associated mirror maps and Bregman
// divergence.
//
// Besides the primal/dual maps, this header exposes the "unit dual"
// coordinates v = grad psi(x) / alpha = sgn(x) ln(|x|/beta + 1). Learners
// keep their dual points in this form: it does not depend on alpha and the
// prox and projection solvers only ever need ln(|y|/beta + 1) = |v|, so
// coordinates whose primal value would overflow stay representable.

#ifndef EXPO_ENTROPY_HPP_
#define EXPO_ENTROPY_HPP_

#include <Eigen/Core>

namespace expo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Largest |theta|/alpha for which the conjugate maps are evaluated.
inline constexpr double kMaxExponent = 700.0;

struct EntropyParams {
  double alpha = 1.0;  // round-dependent scale alpha_t
  double beta = 1.0;   // offset, typically 1/d

  // Throws DomainError unless alpha > 0 and beta > 0 (both finite).
  void validate() const;
};

double phi(double x, const EntropyParams& p);
double phi_grad(double x, const EntropyParams& p);
double phi_hess(double x, const EntropyParams& p);

// Throw NumericRangeError when |theta|/alpha > kMaxExponent.
double phi_conj(double theta, const EntropyParams& p);
double phi_conj_grad(double theta, const EntropyParams& p);
double phi_conj_hess(double theta, const EntropyParams& p);

double psi_value(const Vector& x, const EntropyParams& p);
Vector psi_grad(const Vector& x, const EntropyParams& p);
Vector psi_conj_grad(const Vector& theta, const EntropyParams& p);

// B_psi(x, y) = psi(x) - psi(y) - <grad psi(y), x - y>, evaluated in the
// cancellation-free per-coordinate form.
double bregman(const Vector& x, const Vector& y, const EntropyParams& p);

// sgn(x_i) * ln(|x_i|/beta + 1), i.e. grad psi(x) / alpha.
Vector to_unit_dual(const Vector& x, double beta);
// sgn(v_i) * beta * (exp(|v_i|) - 1), the inverse of to_unit_dual.
// Throws NumericRangeError when some |v_i| > kMaxExponent.
Vector from_unit_dual(const Vector& v, double beta);

double max_abs(const Vector& v);

}  // namespace expo

#endif  // EXPO_ENTROPY_HPP_
