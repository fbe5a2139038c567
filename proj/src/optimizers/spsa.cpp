// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "vqe/error.hpp"
#include "vqe/optimizers.hpp"

namespace vqe {
namespace {

// +-1 per component from raw engine bits, so traces do not depend on the
// standard library's distribution implementations.
class SignSource {
 public:
  explicit SignSource(std::uint64_t seed) : engine_(seed) {}

  void fill(std::vector<double>& delta) {
    for (auto& d : delta) {
      if (left_ == 0) {
        bits_ = engine_();
        left_ = 64;
      }
      d = (bits_ & 1U) ? 1.0 : -1.0;
      bits_ >>= 1;
      --left_;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bits_ = 0;
  int left_ = 0;
};

}  // namespace

OptimizationTrace minimize_spsa(ObjectiveHandle& f, std::vector<double> x0,
                                const OptimizerConfig& cfg) {
  if (x0.empty()) throw ConfigError("optimizer needs at least one parameter");
  if (cfg.spsa_c <= 0.0) throw ConfigError("SPSA perturbation c must be positive");
  const std::size_t n = x0.size();
  const double big_a = cfg.spsa_A >= 0.0 ? cfg.spsa_A : 0.1 * cfg.max_iterations;
  SignSource signs(cfg.seed);
  std::vector<double> delta(n);
  std::vector<double> probe(n);
  std::vector<double> x = std::move(x0);
  OptimizationTrace trace;

  double a = cfg.spsa_a;
  if (a <= 0.0) {
    const double f0 = f(x);
    double mean = 0.0;
    for (int k = 1; k < kSpsaCalibrationEvaluations; ++k) {
      signs.fill(delta);
      for (std::size_t i = 0; i < n; ++i) probe[i] = x[i] + cfg.spsa_c * delta[i];
      mean += std::abs(f(probe) - f0) / cfg.spsa_c;
    }
    mean /= kSpsaCalibrationEvaluations - 1;
    a = cfg.spsa_target_step * std::pow(big_a + 1.0, cfg.spsa_alpha);
    if (mean > 0.0) a /= mean;
  }

  std::vector<double> plus(n);
  std::vector<double> minus(n);
  for (int k = 0; k < cfg.max_iterations; ++k) {
    const double ak = a / std::pow(big_a + k + 1.0, cfg.spsa_alpha);
    const double ck = cfg.spsa_c / std::pow(k + 1.0, cfg.spsa_gamma);
    signs.fill(delta);
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const double fp = f(plus);
    const double fm = f(minus);
    const double slope = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * slope * delta[i];
    trace.iterations.push_back(
        {fp <= fm ? plus : minus, std::min(fp, fm), f.evaluations()});
  }
  trace.termination = Termination::max_iterations;
  trace.final_x = x;
  trace.best_x = f.best_point();
  trace.best_value = f.best_value();
  trace.n_evaluations = f.evaluations();
  return trace;
}

}  // namespace vqe
