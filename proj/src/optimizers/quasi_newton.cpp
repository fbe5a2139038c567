// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "vqe/error.hpp"
#include "vqe/optimizers.hpp"

namespace vqe {
namespace {

constexpr double kArmijo = 1e-4;

double eval_at(ObjectiveHandle& f, const Eigen::VectorXd& x) {
  return f(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

struct Differences {
  Eigen::VectorXd slope;  // raw forward-difference quotients
  Eigen::VectorXd step;
};

// Forward differences: n evaluations.
Differences forward_differences(ObjectiveHandle& f, const Eigen::VectorXd& x, double fx) {
  const double root_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  Differences d{Eigen::VectorXd(x.size()), Eigen::VectorXd(x.size())};
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = root_eps * std::max(std::abs(x(i)), 1.0);
    probe(i) = x(i) + h;
    d.step(i) = probe(i) - x(i);  // exactly representable step
    d.slope(i) = (eval_at(f, probe) - fx) / d.step(i);
    probe(i) = x(i);
  }
  return d;
}

}  // namespace

OptimizationTrace minimize_quasi_newton(ObjectiveHandle& f, std::vector<double> x0,
                                        const OptimizerConfig& cfg) {
  if (x0.empty()) throw ConfigError("optimizer needs at least one parameter");
  if (cfg.max_backtracks < 1) throw ConfigError("max_backtracks must be positive");
  const auto n = static_cast<Eigen::Index>(x0.size());
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(x0.data(), n);
  double fx = eval_at(f, x);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true;
  // Secant pairs use the raw quotients, whose bias cancels between points
  // sharing a step. The gradient that steers and stops the search drops the
  // leading error step/2 * H_ii using the model curvature.
  auto gradient = [&](const Differences& d) -> Eigen::VectorXd {
    if (fresh) return d.slope;
    const Eigen::VectorXd curvature =
        h_inv.llt().solve(Eigen::MatrixXd::Identity(n, n)).diagonal();
    return d.slope - 0.5 * d.step.cwiseProduct(curvature);
  };
  Differences d = forward_differences(f, x, fx);
  Eigen::VectorXd g = d.slope;

  OptimizationTrace trace;
  trace.termination = Termination::max_iterations;
  int iter = 0;
  while (true) {
    if (g.lpNorm<Eigen::Infinity>() < cfg.tolerance) {
      trace.termination = Termination::converged;
      break;
    }
    if (iter >= cfg.max_iterations) break;

    Eigen::VectorXd p = -h_inv * g;
    if (g.dot(p) >= 0.0) {
      h_inv.setIdentity();
      fresh = true;
      g = d.slope;
      p = -g;
    }
    double t = 1.0;
    double f_new = 0.0;
    Eigen::VectorXd x_new;
    bool accepted = false;
    for (int k = 0; k < cfg.max_backtracks; ++k) {
      x_new = x + t * p;
      f_new = eval_at(f, x_new);
      // Strict decrease too: at tiny t the Armijo bound rounds to fx itself.
      if (f_new <= fx + kArmijo * t * g.dot(p) && f_new < fx) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (fresh) {
        trace.termination = Termination::stagnation;
        break;
      }
      h_inv.setIdentity();
      fresh = true;
      g = d.slope;
      continue;
    }

    Differences d_new = forward_differences(f, x_new, f_new);
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = d_new.slope - d.slope;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      h_inv = (eye - rho * s * y.transpose()) * h_inv * (eye - rho * y * s.transpose()) +
              rho * s * s.transpose();
      fresh = false;
    }
    x = x_new;
    fx = f_new;
    d = std::move(d_new);
    g = gradient(d);
    ++iter;
    trace.iterations.push_back({std::vector<double>(x.data(), x.data() + n), fx, f.evaluations()});
  }
  trace.best_x = f.best_point();
  trace.best_value = f.best_value();
  trace.n_evaluations = f.evaluations();
  return trace;
}

}  // namespace vqe
