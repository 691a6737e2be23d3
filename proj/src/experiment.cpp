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

#include "expo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include "expo/acceleration.hpp"
#include "expo/baselines.hpp"
#include "expo/errors.hpp"
#include "expo/learners.hpp"
#include "expo/spectral.hpp"
#include "expo/streams.hpp"
#include "expo/zeroth_order.hpp"

namespace expo {
namespace {

template <class Point>
class Runner {
 public:
  virtual ~Runner() = default;
  virtual const Point& x() const = 0;
  virtual void update(const Point& g) = 0;
};

template <class Point, class Learner>
class RunnerOf final : public Runner<Point> {
 public:
  explicit RunnerOf(Learner learner) : learner_(std::move(learner)) {}
  const Point& x() const override { return learner_.x(); }
  void update(const Point& g) override { learner_.update(g); }

 private:
  Learner learner_;
};

template <class Point, class Learner>
std::unique_ptr<Runner<Point>> wrap(Learner learner) {
  return std::make_unique<RunnerOf<Point, Learner>>(std::move(learner));
}

// AdaGrad-family baselines on the vectorized matrix, followed by the
// Euclidean projection onto the nuclear ball (singular values projected onto
// the l1 ball). The diagonal-metric projection has no closed form here.
class MatrixDiagLearner {
 public:
  MatrixDiagLearner(Eigen::Index rows, Eigen::Index cols, double radius, bool ftrl)
      : rows_(rows), cols_(cols), radius_(radius), ftrl_(ftrl),
        h_(Vector::Constant(rows * cols, kAdagradFloor)),
        g_accum_(Vector::Zero(rows * cols)), x_(Matrix::Zero(rows, cols)) {}

  const Matrix& x() const { return x_; }

  void update(const Matrix& g) {
    const Eigen::Map<const Vector> gv(g.data(), g.size());
    h_ += gv.cwiseAbs2();
    g_accum_ += gv;
    const Vector s = h_.cwiseSqrt();
    Vector u;
    if (ftrl_) {
      u = -g_accum_.cwiseQuotient(s);
    } else {
      const Eigen::Map<const Vector> xv(x_.data(), x_.size());
      u = xv - gv.cwiseQuotient(s);
    }
    const Matrix um = Eigen::Map<const Matrix>(u.data(), rows_, cols_);
    SvdFactors f = svd(um);
    if (f.s.sum() > radius_) {
      f.s = weighted_l1_ball_project(f.s, Vector::Ones(f.s.size()), radius_);
      x_ = f.reconstruct();
    } else {
      x_ = um;
    }
  }

 private:
  Eigen::Index rows_, cols_;
  double radius_;
  bool ftrl_;
  Vector h_, g_accum_;
  Matrix x_;
};

double radius_factor(RadiusMode mode) {
  switch (mode) {
    case RadiusMode::kKnown: return 1.0;
    case RadiusMode::kHalf: return 0.5;
    case RadiusMode::kDouble: return 2.0;
  }
  return 1.0;
}

using TrialRecords = std::vector<std::vector<RegretRecord>>;  // by algorithm

std::size_t algorithm_tag(ExperimentKind kind, const std::string& name) {
  const auto all = available_algorithms(kind);
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), name) - all.begin());
}

std::unique_ptr<Runner<Vector>> make_vector_learner(const std::string& name,
                                                    std::size_t d, double radius) {
  const BallConstraint ball{radius};
  const ScheduleParams sched = ScheduleParams::defaults(d, radius);
  if (name == "exp-md") return wrap<Vector>(ExpOmd(sched, ball));
  if (name == "exp-ftrl") return wrap<Vector>(ExpFtrl(sched, ball));
  if (name == "adagrad") return wrap<Vector>(AdaGrad(d, ball));
  if (name == "adaftrl") return wrap<Vector>(AdaFtrl(d, ball));
  if (name == "eg-pm") return wrap<Vector>(EgPm(d, radius));
  throw ConfigError("unknown algorithm for logistic: " + name);
}

std::unique_ptr<Runner<Matrix>> make_matrix_learner(const std::string& name,
                                                    std::size_t m, std::size_t n,
                                                    double radius) {
  const BallConstraint ball{radius};
  const SpectralSchedule sched = SpectralSchedule::defaults(m, n, radius);
  const auto rows = static_cast<Eigen::Index>(m);
  const auto cols = static_cast<Eigen::Index>(n);
  if (name == "exp-md") return wrap<Matrix>(SpectralExpOmd(sched, ball));
  if (name == "exp-ftrl") return wrap<Matrix>(SpectralExpFtrl(sched, ball));
  if (name == "adagrad") return wrap<Matrix>(MatrixDiagLearner(rows, cols, radius, false));
  if (name == "adaftrl") return wrap<Matrix>(MatrixDiagLearner(rows, cols, radius, true));
  throw ConfigError("unknown algorithm for multitask: " + name);
}

// Runs the online loop shared by the logistic and multitask experiments.
template <class Point, class Stream, class LossFn, class GradFn>
TrialRecords run_online(const ExperimentSpec& spec, std::size_t trial, Stream& stream,
                        const Point& comparator,
                        std::vector<std::unique_ptr<Runner<Point>>> learners,
                        LossFn loss, GradFn grad) {
  const std::size_t n_alg = learners.size();
  TrialRecords out(n_alg);
  for (auto& v : out) v.reserve(spec.horizon);
  std::vector<double> cumulative(n_alg, 0.0);
  std::vector<bool> alive(n_alg, true);
  for (std::size_t t = 1; t <= spec.horizon; ++t) {
    const auto sample = stream.next();
    const double comparator_loss = loss(comparator, sample);
    for (std::size_t a = 0; a < n_alg; ++a) {
      if (!alive[a]) continue;
      RegretRecord rec{spec.algorithms[a], trial, t, 0.0, false};
      try {
        const Point& x = learners[a]->x();
        cumulative[a] += loss(x, sample) - comparator_loss;
        rec.value = cumulative[a];
        learners[a]->update(grad(x, sample));
      } catch (const NumericRangeError&) {
        rec.value = std::numeric_limits<double>::quiet_NaN();
        rec.failed = true;
        alive[a] = false;
      } catch (const DomainError&) {
        rec.value = std::numeric_limits<double>::quiet_NaN();
        rec.failed = true;
        alive[a] = false;
      }
      out[a].push_back(std::move(rec));
    }
  }
  return out;
}

TrialRecords run_logistic_trial(const ExperimentSpec& spec, std::size_t trial) {
  Rng rng(trial_seed(spec, trial));
  LogisticStream stream(spec, rng);
  const double radius = radius_factor(spec.radius_mode) * stream.w_star().lpNorm<1>();
  std::vector<std::unique_ptr<Runner<Vector>>> learners;
  for (const auto& name : spec.algorithms) {
    learners.push_back(make_vector_learner(name, spec.dim, radius));
  }
  return run_online<Vector>(
      spec, trial, stream, stream.w_star(), std::move(learners),
      [](const Vector& w, const LogisticSample& s) { return logistic_loss(w, s.x, s.y); },
      [](const Vector& w, const LogisticSample& s) { return logistic_grad(w, s.x, s.y); });
}

TrialRecords run_multitask_trial(const ExperimentSpec& spec, std::size_t trial) {
  Rng rng(trial_seed(spec, trial));
  MultitaskStream stream(spec, rng);
  const double radius = radius_factor(spec.radius_mode) * stream.sigma().sum();
  if (!(radius > 0.0)) throw ConfigError("multitask: W* = 0 gives a zero radius");
  std::vector<std::unique_ptr<Runner<Matrix>>> learners;
  for (const auto& name : spec.algorithms) {
    learners.push_back(make_matrix_learner(name, spec.dim, spec.tasks, radius));
  }
  return run_online<Matrix>(spec, trial, stream, stream.w_star(), std::move(learners),
                            multitask_loss, multitask_grad);
}

template <class Learner>
void run_accelerated(const ExperimentSpec& spec, std::size_t trial,
                     const BlackboxProblem& problem, Learner learner,
                     const EstimatorConfig& cfg, Rng& rng, std::vector<RegretRecord>& out,
                     const std::string& name) {
  const Objective smooth = [&problem](const Vector& x) { return problem.smooth_part(x); };
  AccelState<Learner> state(std::move(learner));
  for (std::size_t t = 1; t <= spec.horizon; ++t) {
    RegretRecord rec{name, trial, t, 0.0, false};
    try {
      state = accel_step(std::move(state), [&](const Vector& z) {
        return two_point_grad(smooth, z, cfg, rng);
      });
      rec.value = problem.objective(state.z);
    } catch (const NumericRangeError&) {
      rec.value = std::numeric_limits<double>::quiet_NaN();
      rec.failed = true;
    } catch (const DomainError&) {
      rec.value = std::numeric_limits<double>::quiet_NaN();
      rec.failed = true;
    }
    out.push_back(rec);
    if (rec.failed) return;
  }
}

template <class Learner>
void run_plain(const ExperimentSpec& spec, std::size_t trial,
               const BlackboxProblem& problem, Learner learner,
               const EstimatorConfig& cfg, Rng& rng, std::vector<RegretRecord>& out,
               const std::string& name) {
  const Objective smooth = [&problem](const Vector& x) { return problem.smooth_part(x); };
  for (std::size_t t = 1; t <= spec.horizon; ++t) {
    RegretRecord rec{name, trial, t, 0.0, false};
    rec.value = problem.objective(learner.x());
    learner.update(two_point_grad(smooth, learner.x(), cfg, rng));
    out.push_back(rec);
  }
}

TrialRecords run_blackbox_trial(const ExperimentSpec& spec, std::size_t trial) {
  const std::uint64_t seed = trial_seed(spec, trial);
  Rng rng(seed);
  const BlackboxProblem problem(spec, rng);
  const std::size_t d = spec.dim;
  const CompositeRegularizer reg{spec.gamma1, spec.gamma2};
  const ScheduleParams sched = ScheduleParams::defaults(d, spec.radius);
  TrialRecords out(spec.algorithms.size());
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    const std::string& name = spec.algorithms[a];
    Rng est_rng(Rng::derive(seed, 1000 + algorithm_tag(spec.kind, name)));
    out[a].reserve(spec.horizon);
    if (name == "acc-exp-md") {
      run_accelerated(spec, trial, problem, ExpOmd(sched, reg),
                      EstimatorConfig::rademacher(d, spec.horizon, spec.batch), est_rng,
                      out[a], name);
    } else if (name == "acc-exp-ftrl") {
      run_accelerated(spec, trial, problem, ExpFtrl(sched, reg),
                      EstimatorConfig::rademacher(d, spec.horizon, spec.batch), est_rng,
                      out[a], name);
    } else if (name == "adagrad") {
      run_plain(spec, trial, problem, AdaGrad(d, reg),
                EstimatorConfig::unit_sphere(d, spec.horizon, spec.batch), est_rng,
                out[a], name);
    } else if (name == "adaftrl") {
      run_plain(spec, trial, problem, AdaFtrl(d, reg),
                EstimatorConfig::unit_sphere(d, spec.horizon, spec.batch), est_rng,
                out[a], name);
    } else {
      throw ConfigError("unknown algorithm for blackbox: " + name);
    }
  }
  return out;
}

TrialRecords run_trial(const ExperimentSpec& spec, std::size_t trial) {
  switch (spec.kind) {
    case ExperimentKind::kLogistic: return run_logistic_trial(spec, trial);
    case ExperimentKind::kMultitask: return run_multitask_trial(spec, trial);
    case ExperimentKind::kBlackbox: return run_blackbox_trial(spec, trial);
  }
  return {};
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kLogistic: return "logistic";
    case ExperimentKind::kMultitask: return "multitask";
    case ExperimentKind::kBlackbox: return "blackbox";
  }
  return "unknown";
}

std::string to_string(RadiusMode mode) {
  switch (mode) {
    case RadiusMode::kKnown: return "known";
    case RadiusMode::kHalf: return "half";
    case RadiusMode::kDouble: return "double";
  }
  return "unknown";
}

std::vector<std::string> available_algorithms(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kLogistic:
      return {"exp-md", "exp-ftrl", "adagrad", "adaftrl", "eg-pm"};
    case ExperimentKind::kMultitask:
      return {"exp-md", "exp-ftrl", "adagrad", "adaftrl"};
    case ExperimentKind::kBlackbox:
      return {"acc-exp-md", "acc-exp-ftrl", "adagrad", "adaftrl"};
  }
  return {};
}

ExperimentSpec ExperimentSpec::defaults(ExperimentKind kind) {
  ExperimentSpec s;
  s.kind = kind;
  s.algorithms = available_algorithms(kind);
  switch (kind) {
    case ExperimentKind::kLogistic:
      s.dim = 500;
      s.horizon = 2000;
      break;
    case ExperimentKind::kMultitask:
      s.dim = 20;
      s.tasks = 5;
      s.rank = 2;
      s.horizon = 1000;
      break;
    case ExperimentKind::kBlackbox:
      s.dim = 100;
      s.horizon = 1000;
      s.trials = 5;
      break;
  }
  return s;
}

void ExperimentSpec::validate() const {
  if (dim < 1) throw ConfigError("dim must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (!(sparsity >= 0.0 && sparsity <= 1.0)) throw ConfigError("sparsity must be in [0, 1]");
  if (algorithms.empty()) throw ConfigError("algorithms must not be empty");
  const auto known = available_algorithms(kind);
  for (const auto& a : algorithms) {
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw ConfigError("unknown algorithm '" + a + "' for " + to_string(kind));
    }
  }
  switch (kind) {
    case ExperimentKind::kLogistic:
      if (support_size(sparsity, dim) == 0) {
        throw ConfigError("logistic: sparsity leaves w* without nonzeros");
      }
      break;
    case ExperimentKind::kMultitask:
      if (tasks < 1) throw ConfigError("multitask: tasks must be >= 1");
      if (rank > std::min(dim, tasks)) throw ConfigError("multitask: rank exceeds min(d, k)");
      break;
    case ExperimentKind::kBlackbox:
      if (batch < 1) throw ConfigError("blackbox: batch must be >= 1");
      if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0)) {
        throw ConfigError("blackbox: gamma1, gamma2 must be >= 0");
      }
      if (!(radius > 0.0)) throw ConfigError("blackbox: radius must be positive");
      break;
  }
}

std::uint64_t trial_seed(const ExperimentSpec& spec, std::size_t trial) {
  return Rng::derive(spec.seed, trial, static_cast<std::uint64_t>(spec.kind));
}

std::vector<RegretRecord> run_experiment(const ExperimentSpec& spec,
                                         const RunOptions& options) {
  spec.validate();
  if (spec.horizon == 0) return {};

  std::vector<TrialRecords> per_trial(spec.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.trials; i = next++) {
      try {
        per_trial[i] = run_trial(spec, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(options.threads, spec.trials));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<RegretRecord> records;
  records.reserve(spec.algorithms.size() * spec.trials * spec.horizon);
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    for (auto& trial : per_trial) {
      for (auto& rec : trial[a]) records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ExperimentSpec& spec,
               const std::vector<RegretRecord>& records) {
  const std::string experiment = to_string(spec.kind);
  out << "experiment,algorithm,trial,round,value\n";
  for (const auto& r : records) {
    out << experiment << ',' << r.algorithm << ',' << r.trial << ',' << r.round << ','
        << format_value(r.value) << '\n';
  }
}

std::map<std::string, SeriesStats> aggregate(const std::vector<RegretRecord>& records) {
  struct Acc {
    std::vector<double> mean, m2;
    std::vector<std::size_t> n;
  };
  std::map<std::string, Acc> acc;
  for (const auto& r : records) {
    if (r.failed || r.round == 0) continue;
    Acc& a = acc[r.algorithm];
    const std::size_t i = r.round - 1;
    if (a.n.size() <= i) {
      a.mean.resize(i + 1, 0.0);
      a.m2.resize(i + 1, 0.0);
      a.n.resize(i + 1, 0);
    }
    const double delta = r.value - a.mean[i];
    a.n[i] += 1;
    a.mean[i] += delta / static_cast<double>(a.n[i]);
    a.m2[i] += delta * (r.value - a.mean[i]);
  }
  std::map<std::string, SeriesStats> out;
  for (auto& [name, a] : acc) {
    SeriesStats s;
    s.mean = a.mean;
    s.count = a.n;
    s.stddev.resize(a.n.size());
    for (std::size_t i = 0; i < a.n.size(); ++i) {
      s.stddev[i] = a.n[i] > 1 ? std::sqrt(a.m2[i] / static_cast<double>(a.n[i] - 1)) : 0.0;
    }
    out.emplace(name, std::move(s));
  }
  return out;
}

std::map<std::string, std::vector<double>> final_values(
    const std::vector<RegretRecord>& records) {
  std::size_t last_round = 0;
  for (const auto& r : records) last_round = std::max(last_round, r.round);
  std::map<std::string, std::vector<double>> out;
  for (const auto& r : records) {
    if (r.round != last_round) continue;
    auto& v = out[r.algorithm];
    if (v.size() <= r.trial) v.resize(r.trial + 1, std::numeric_limits<double>::quiet_NaN());
    v[r.trial] = r.value;
  }
  return out;
}

}  // namespace expo
