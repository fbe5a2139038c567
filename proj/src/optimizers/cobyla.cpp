// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Unconstrained form of Powell's COBYLA. The simplex is stored as a pole
// (best vertex) plus n displacement columns, with the inverse of the
// displacement matrix kept up to date by rank-one updates.

#include <cmath>

#include <Eigen/Dense>

#include "vqe/error.hpp"
#include "vqe/optimizers.hpp"

namespace vqe {
namespace {

constexpr double kAlpha = 0.25;
constexpr double kBeta = 2.1;
constexpr double kGamma = 0.5;
constexpr double kDelta = 1.1;

class Cobyla {
 public:
  Cobyla(ObjectiveHandle& f, std::vector<double> x0, const OptimizerConfig& cfg)
      : f_(f), cfg_(cfg), n_(static_cast<int>(x0.size())), rho_(cfg.rho_begin) {
    pole_ = Eigen::Map<Eigen::VectorXd>(x0.data(), n_);
  }

  OptimizationTrace run() {
    initial_simplex();
    bool acceptable_branch = true;  // true: trust step allowed this pass
    while (true) {
      move_best_to_pole();
      if (!inverse_ok()) repair();
      const Eigen::VectorXd g = gradient();

      const double parsig = kAlpha * rho_;
      const double pareta = kBeta * rho_;
      bool acceptable = true;
      for (int j = 0; j < n_; ++j) {
        vsig_(j) = 1.0 / simi_.row(j).norm();
        veta_(j) = sim_.col(j).norm();
        if (vsig_(j) < parsig || veta_(j) > pareta) acceptable = false;
      }

      if (!acceptable_branch && !acceptable) {
        if (out_of_budget()) return finish(Termination::max_iterations);
        geometry_step(g, parsig, pareta);
        acceptable_branch = true;
        continue;
      }

      // Trust-region step of the linear model.
      Eigen::VectorXd dx = Eigen::VectorXd::Zero(n_);
      const double gnorm = g.norm();
      if (gnorm > 0.0) dx = -rho_ * g / gnorm;
      bool reduce = dx.squaredNorm() < 0.25 * rho_ * rho_;
      if (!reduce) {
        if (out_of_budget()) return finish(Termination::max_iterations);
        const double prerem = -g.dot(dx);
        const Eigen::VectorXd x = pole_ + dx;
        const double fx = evaluate(x);
        const double trured = fpole_ - fx;
        double ratio = trured <= 0.0 ? 1.0 : 0.0;
        int jdrop = -1;
        Eigen::VectorXd sigbar(n_);
        for (int j = 0; j < n_; ++j) {
          const double t = std::abs(simi_.row(j).dot(dx));
          if (t > ratio) {
            jdrop = j;
            ratio = t;
          }
          sigbar(j) = t * vsig_(j);
        }
        double edgmax = kDelta * rho_;
        int ell = -1;
        for (int j = 0; j < n_; ++j) {
          if (sigbar(j) >= parsig || sigbar(j) >= vsig_(j)) {
            double t = veta_(j);
            if (trured > 0.0) t = (dx - sim_.col(j)).norm();
            if (t > edgmax) {
              ell = j;
              edgmax = t;
            }
          }
        }
        if (ell >= 0) jdrop = ell;
        if (jdrop >= 0) {
          replace_vertex(jdrop, dx);
          fvals_(jdrop) = fx;
          if (trured > 0.0 && trured >= 0.1 * prerem) {
            acceptable_branch = true;
            continue;
          }
        }
        reduce = true;
      }
      if (reduce) {
        if (!acceptable) {
          acceptable_branch = false;
          continue;
        }
        if (rho_ <= cfg_.rho_end) return finish(Termination::converged);
        rho_ *= 0.5;
        if (rho_ <= 1.5 * cfg_.rho_end) rho_ = cfg_.rho_end;
        acceptable_branch = true;
      }
    }
  }

 private:
  double evaluate(const Eigen::VectorXd& x) {
    const double v = f_(std::span<const double>(x.data(), static_cast<std::size_t>(n_)));
    if (started_) {
      trace_.iterations.push_back(
          {std::vector<double>(x.data(), x.data() + n_), v, f_.evaluations()});
    }
    return v;
  }

  bool out_of_budget() const {
    return static_cast<int>(trace_.iterations.size()) >= cfg_.max_iterations;
  }

  void initial_simplex() {
    sim_ = rho_ * Eigen::MatrixXd::Identity(n_, n_);
    simi_ = Eigen::MatrixXd::Identity(n_, n_) / rho_;
    fvals_.resize(n_);
    vsig_.resize(n_);
    veta_.resize(n_);
    fpole_ = evaluate(pole_);
    for (int j = 0; j < n_; ++j) {
      Eigen::VectorXd x = pole_;
      x(j) += rho_;
      const double fx = evaluate(x);
      if (fx < fpole_) {
        // New vertex becomes the pole; earlier vertices shift by -rho in coordinate j.
        fvals_(j) = fpole_;
        fpole_ = fx;
        pole_(j) = x(j);
        for (int k = 0; k <= j; ++k) {
          sim_(j, k) = -rho_;
          double t = 0.0;
          for (int i = k; i <= j; ++i) t -= simi_(i, k);
          simi_(j, k) = t;
        }
      } else {
        fvals_(j) = fx;
      }
    }
    started_ = true;
  }

  void move_best_to_pole() {
    int best = -1;
    double fmin = fpole_;
    for (int j = 0; j < n_; ++j) {
      if (fvals_(j) < fmin) {
        best = j;
        fmin = fvals_(j);
      }
    }
    if (best < 0) return;
    std::swap(fvals_(best), fpole_);
    const Eigen::VectorXd shift = sim_.col(best);
    pole_ += shift;
    sim_.col(best).setZero();
    for (int k = 0; k < n_; ++k) sim_.col(k) -= shift;
    for (int i = 0; i < n_; ++i) simi_(best, i) = -simi_.col(i).sum();
  }

  bool inverse_ok() const {
    const Eigen::MatrixXd e = simi_ * sim_ - Eigen::MatrixXd::Identity(n_, n_);
    return e.cwiseAbs().maxCoeff() <= 0.1;
  }

  // Recompute the inverse directly; if the simplex itself is degenerate,
  // rebuild it around the pole with fresh evaluations.
  void repair() {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sim_);
    if (lu.isInvertible() && lu.rcond() > 1e-12) {
      simi_ = lu.inverse();
      if (inverse_ok()) return;
    }
    sim_ = rho_ * Eigen::MatrixXd::Identity(n_, n_);
    simi_ = Eigen::MatrixXd::Identity(n_, n_) / rho_;
    for (int j = 0; j < n_; ++j) {
      Eigen::VectorXd x = pole_;
      x(j) += rho_;
      fvals_(j) = evaluate(x);
    }
    move_best_to_pole();
  }

  Eigen::VectorXd gradient() const {
    Eigen::VectorXd w = fvals_.array() - fpole_;
    return simi_.transpose() * w;
  }

  void replace_vertex(int jdrop, const Eigen::VectorXd& dx) {
    sim_.col(jdrop) = dx;
    const double t = simi_.row(jdrop).dot(dx);
    simi_.row(jdrop) /= t;
    for (int j = 0; j < n_; ++j) {
      if (j == jdrop) continue;
      const double s = simi_.row(j).dot(dx);
      simi_.row(j) -= s * simi_.row(jdrop);
    }
  }

  void geometry_step(const Eigen::VectorXd& g, double parsig, double pareta) {
    int jdrop = -1;
    double t = pareta;
    for (int j = 0; j < n_; ++j) {
      if (veta_(j) > t) {
        jdrop = j;
        t = veta_(j);
      }
    }
    if (jdrop < 0) {
      t = parsig;
      for (int j = 0; j < n_; ++j) {
        if (vsig_(j) < t) {
          jdrop = j;
          t = vsig_(j);
        }
      }
    }
    if (jdrop < 0) jdrop = 0;
    Eigen::VectorXd dx = kGamma * rho_ * vsig_(jdrop) * simi_.row(jdrop).transpose();
    if (g.dot(dx) > 0.0) dx = -dx;
    replace_vertex(jdrop, dx);
    fvals_(jdrop) = evaluate(pole_ + dx);
  }

  OptimizationTrace finish(Termination reason) {
    trace_.termination = reason;
    trace_.best_x = f_.best_point();
    trace_.best_value = f_.best_value();
    trace_.n_evaluations = f_.evaluations();
    return std::move(trace_);
  }

  ObjectiveHandle& f_;
  const OptimizerConfig& cfg_;
  int n_;
  double rho_;
  bool started_ = false;
  Eigen::VectorXd pole_;
  double fpole_ = 0.0;
  Eigen::MatrixXd sim_;
  Eigen::MatrixXd simi_;
  Eigen::VectorXd fvals_;
  Eigen::VectorXd vsig_;
  Eigen::VectorXd veta_;
  OptimizationTrace trace_;
};

}  // namespace

OptimizationTrace minimize_cobyla(ObjectiveHandle& f, std::vector<double> x0,
                                  const OptimizerConfig& cfg) {
  if (x0.empty()) throw ConfigError("optimizer needs at least one parameter");
  if (!(cfg.rho_begin > cfg.rho_end && cfg.rho_end > 0.0)) {
    throw ConfigError("COBYLA needs rho_begin > rho_end > 0");
  }
  return Cobyla(f, std::move(x0), cfg).run();
}

}  // namespace vqe
