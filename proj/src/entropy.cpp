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

#include "expo/entropy.hpp"

#include <cmath>
#include <string>

#include "expo/errors.hpp"

namespace expo {
namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// (1 + u) ln(1 + u) - u for u >= 0. The direct form cancels for small u.
double entropy_kernel(double u) {
  if (u < 1e-2) {
    // sum_{k>=2} (-1)^k u^k / (k (k - 1))
    double term = u * u;
    double sum = 0.0;
    for (int k = 2; k < 14; ++k) {
      sum += ((k % 2 == 0) ? 1.0 : -1.0) * term / (k * (k - 1.0));
      term *= u;
    }
    return sum;
  }
  return (1.0 + u) * std::log1p(u) - u;
}

// exp(t) - 1 - t for t >= 0.
double conj_kernel(double t) {
  if (t < 1e-2) {
    double term = t * t / 2.0;
    double sum = 0.0;
    for (int k = 2; k < 12; ++k) {
      sum += term;
      term *= t / (k + 1.0);
    }
    return sum;
  }
  return std::expm1(t) - t;
}

double checked_exponent(double theta, double alpha) {
  const double t = std::abs(theta) / alpha;
  if (!(t <= kMaxExponent)) {
    throw NumericRangeError("conjugate map argument |theta|/alpha = " +
                            std::to_string(t) + " exceeds " +
                            std::to_string(kMaxExponent));
  }
  return t;
}

}  // namespace

void EntropyParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("EntropyParams: alpha must be positive and finite");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("EntropyParams: beta must be positive and finite");
  }
}

double phi(double x, const EntropyParams& p) {
  return p.alpha * p.beta * entropy_kernel(std::abs(x) / p.beta);
}

double phi_grad(double x, const EntropyParams& p) {
  return p.alpha * std::log1p(std::abs(x) / p.beta) * sgn(x);
}

double phi_hess(double x, const EntropyParams& p) {
  return p.alpha / (std::abs(x) + p.beta);
}

double phi_conj(double theta, const EntropyParams& p) {
  const double t = checked_exponent(theta, p.alpha);
  return p.alpha * p.beta * conj_kernel(t);
}

double phi_conj_grad(double theta, const EntropyParams& p) {
  const double t = checked_exponent(theta, p.alpha);
  return p.beta * std::expm1(t) * sgn(theta);
}

double phi_conj_hess(double theta, const EntropyParams& p) {
  const double t = checked_exponent(theta, p.alpha);
  return p.beta / p.alpha * std::exp(t);
}

double psi_value(const Vector& x, const EntropyParams& p) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += phi(x[i], p);
  return sum;
}

Vector psi_grad(const Vector& x, const EntropyParams& p) {
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = phi_grad(x[i], p);
  return out;
}

Vector psi_conj_grad(const Vector& theta, const EntropyParams& p) {
  Vector out(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    out[i] = phi_conj_grad(theta[i], p);
  }
  return out;
}

double bregman(const Vector& x, const Vector& y, const EntropyParams& p) {
  check_dim("bregman", x.size(), y.size());
  // alpha * sum (|x|+b) ln(|x|/b+1) - |x| - (sgn(y) x + b) ln(|y|/b+1) + |y|
  // regrouped so that equal arguments cancel exactly.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double ax = std::abs(x[i]);
    const double ay = std::abs(y[i]);
    const double lx = std::log1p(ax / p.beta);
    const double ly = std::log1p(ay / p.beta);
    // (ax + b)(lx - ly) - (ax - ay) + (ax - sgn(y) x) ly
    const double term = (ax + p.beta) * (lx - ly) - (ax - ay) +
                        (ax - sgn(y[i]) * x[i]) * ly;
    sum += term;
  }
  return p.alpha * sum;
}

Vector to_unit_dual(const Vector& x, double beta) {
  Vector v(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    v[i] = sgn(x[i]) * std::log1p(std::abs(x[i]) / beta);
  }
  return v;
}

Vector from_unit_dual(const Vector& v, double beta) {
  Vector x(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double t = std::abs(v[i]);
    if (!(t <= kMaxExponent)) {
      throw NumericRangeError("unit dual coordinate " + std::to_string(t) +
                              " exceeds " + std::to_string(kMaxExponent));
    }
    x[i] = sgn(v[i]) * beta * std::expm1(t);
  }
  return x;
}

double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace expo
