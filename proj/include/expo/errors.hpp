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

#ifndef EXPO_ERRORS_HPP_
#define EXPO_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expo {

// Raised when an exponential map would leave the representable range
// (|theta|/alpha above kMaxExponent).
class NumericRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& where, std::size_t expected,
                    std::size_t got)
      : std::invalid_argument(where + ": expected dimension " +
                              std::to_string(expected) + ", got " +
                              std::to_string(got)) {}
};

inline void check_dim(const char* where, std::size_t expected,
                      std::size_t got) {
  if (expected != got) throw DimensionMismatch(where, expected, got);
}

}  // namespace expo

#endif  // EXPO_ERRORS_HPP_
