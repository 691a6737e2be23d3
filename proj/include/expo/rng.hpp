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

#ifndef EXPO_RNG_HPP_
#define EXPO_RNG_HPP_

#include <cstdint>
#include <random>

#include "expo/entropy.hpp"

namespace expo {

// Portable random source. The engine is std::mt19937_64, whose output is
// fixed by the standard; the distributions are implemented here because the
// standard library ones are implementation-defined.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/splitmix64-derive/polar-normal";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Child seed for an independent substream, e.g. derive(seed, trial, tag).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0);

  std::uint64_t next_u64() { return engine_(); }
  double uniform();  // [0, 1), 53 random bits
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  double rademacher() { return (engine_() >> 63) ? 1.0 : -1.0; }
  bool bernoulli(double p) { return uniform() < p; }
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

  Vector uniform_vector(Eigen::Index d, double lo, double hi);
  Vector normal_vector(Eigen::Index d);
  Matrix normal_matrix(Eigen::Index rows, Eigen::Index cols);
  // Haar-distributed orthogonal matrix via QR of a Gaussian matrix.
  Matrix orthogonal(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace expo

#endif  // EXPO_RNG_HPP_
