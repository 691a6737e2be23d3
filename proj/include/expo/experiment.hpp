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

// Synthetic benchmark experiments and their regret bookkeeping.

#ifndef EXPO_EXPERIMENT_HPP_
#define EXPO_EXPERIMENT_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace expo {

inline constexpr const char* kLibraryVersion = "0.1.0";

enum class ExperimentKind { kLogistic, kMultitask, kBlackbox };
enum class RadiusMode { kKnown, kHalf, kDouble };

std::string to_string(ExperimentKind kind);
std::string to_string(RadiusMode mode);

// Invalid experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kLogistic;
  std::size_t dim = 500;
  std::size_t tasks = 5;  // multitask only
  std::size_t rank = 2;   // multitask only
  std::size_t horizon = 2000;
  std::size_t trials = 20;
  double sparsity = 0.99;
  RadiusMode radius_mode = RadiusMode::kKnown;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 1;
  // Black-box composite objective only.
  std::size_t batch = 1;
  double gamma1 = 0.01;
  double gamma2 = 0.01;
  double radius = 1.0;

  // Desk-scale defaults per experiment kind.
  static ExperimentSpec defaults(ExperimentKind kind);
  // Throws ConfigError.
  void validate() const;
};

std::vector<std::string> available_algorithms(ExperimentKind kind);

// One row per (algorithm, trial, round). For online experiments `value` is
// the cumulative regret against the generating parameter; for black-box
// runs it is the composite objective at the current solution estimate.
struct RegretRecord {
  std::string algorithm;
  std::size_t trial = 0;
  std::size_t round = 0;
  double value = 0.0;
  bool failed = false;  // numeric failure; the run stops at this round
};

struct RunOptions {
  std::size_t threads = 1;
};

// Every algorithm of a trial sees the same data stream. Records are ordered
// by algorithm (in the order of spec.algorithms), then trial, then round.
std::vector<RegretRecord> run_experiment(const ExperimentSpec& spec,
                                         const RunOptions& options = {});

// Seed of the data stream of one trial.
std::uint64_t trial_seed(const ExperimentSpec& spec, std::size_t trial);

void write_csv(std::ostream& out, const ExperimentSpec& spec,
               const std::vector<RegretRecord>& records);
std::string format_value(double v);

struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // sample standard deviation (n - 1)
  std::vector<std::size_t> count;
};

// Per-algorithm, per-round mean and standard deviation across trials,
// accumulated in one pass (Welford). Failed records are skipped.
std::map<std::string, SeriesStats> aggregate(const std::vector<RegretRecord>& records);

// Final-round values per algorithm, indexed by trial.
std::map<std::string, std::vector<double>> final_values(
    const std::vector<RegretRecord>& records);

}  // namespace expo

#endif  // EXPO_EXPERIMENT_HPP_
