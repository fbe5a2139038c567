// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace vqe {

enum class OptimizerKind { spsa, cobyla, quasi_newton };
enum class Termination { converged, max_iterations, stagnation };

std::string to_string(OptimizerKind k);
std::string to_string(Termination t);
/// Accepts "spsa", "cobyla", "qn", "quasi_newton".
OptimizerKind parse_optimizer_kind(const std::string& text);

/**
 * @brief Counted objective with best-so-far tracking.
 *
 * Every call increments the counter exactly once. Non-finite values throw
 * NumericError naming the offending point.
 */
class ObjectiveHandle {
 public:
  using Function = std::function<double(std::span<const double>)>;
  using Sink = std::function<void(std::span<const double> x, double value, long count)>;

  explicit ObjectiveHandle(Function f, Sink sink = {});

  double operator()(std::span<const double> x);

  long evaluations() const noexcept { return count_; }
  double best_value() const noexcept { return best_value_; }
  const std::vector<double>& best_point() const noexcept { return best_point_; }

 private:
  Function f_;
  Sink sink_;
  long count_ = 0;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_point_;
};

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::quasi_newton;
  int max_iterations = 1000;
  /// quasi-Newton: gradient infinity-norm threshold.
  double tolerance = 1e-6;

  std::uint64_t seed = 1234;
  double spsa_a = 0.0;  // <= 0: calibrate
  double spsa_c = 0.1;
  double spsa_alpha = 0.602;
  double spsa_gamma = 0.101;
  double spsa_A = -1.0;  // < 0: 0.1 * max_iterations
  double spsa_target_step = 0.1;

  double rho_begin = 0.5;
  double rho_end = 1e-6;

  int max_backtracks = 40;
};

inline constexpr int kSpsaCalibrationEvaluations = 25;

struct IterationRecord {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;  // cumulative
};

struct OptimizationTrace {
  std::vector<IterationRecord> iterations;
  std::vector<double> best_x;
  /// Last iterate if it was never evaluated (SPSA only probes around it); else empty.
  std::vector<double> final_x;
  double best_value = std::numeric_limits<double>::infinity();
  long n_evaluations = 0;
  Termination termination = Termination::max_iterations;
};

/// Simultaneous-perturbation stochastic approximation; 25 calibration calls, then 2 per iteration.
OptimizationTrace minimize_spsa(ObjectiveHandle& f, std::vector<double> x0,
                                const OptimizerConfig& cfg);

/// Unconstrained linear-model trust-region method; n+1 start calls, then 1 per iteration.
OptimizationTrace minimize_cobyla(ObjectiveHandle& f, std::vector<double> x0,
                                  const OptimizerConfig& cfg);

/// BFGS with forward-difference gradients and Armijo backtracking.
OptimizationTrace minimize_quasi_newton(ObjectiveHandle& f, std::vector<double> x0,
                                        const OptimizerConfig& cfg);

OptimizationTrace minimize(ObjectiveHandle& f, std::vector<double> x0, const OptimizerConfig& cfg);

}  // namespace vqe
