// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "vqe/error.hpp"
#include "vqe/optimizers.hpp"

namespace vqe {

std::string to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::spsa: return "spsa";
    case OptimizerKind::cobyla: return "cobyla";
    default: return "qn";
  }
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iterations: return "max_iterations";
    default: return "stagnation";
  }
}

OptimizerKind parse_optimizer_kind(const std::string& text) {
  if (text == "spsa") return OptimizerKind::spsa;
  if (text == "cobyla") return OptimizerKind::cobyla;
  if (text == "qn" || text == "quasi_newton" || text == "bfgs") return OptimizerKind::quasi_newton;
  throw ConfigError("unknown optimizer '" + text + "' (expected spsa, cobyla or qn)");
}

ObjectiveHandle::ObjectiveHandle(Function f, Sink sink) : f_(std::move(f)), sink_(std::move(sink)) {
  if (!f_) throw ConfigError("objective callback is empty");
}

double ObjectiveHandle::operator()(std::span<const double> x) {
  ++count_;
  const double v = f_(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "objective returned " << v << " at (";
    for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
    msg << ")";
    throw NumericError(msg.str());
  }
  if (v < best_value_) {
    best_value_ = v;
    best_point_.assign(x.begin(), x.end());
  }
  if (sink_) sink_(x, v, count_);
  return v;
}

OptimizationTrace minimize(ObjectiveHandle& f, std::vector<double> x0, const OptimizerConfig& cfg) {
  if (x0.empty()) throw ConfigError("optimizer needs at least one parameter");
  if (cfg.max_iterations < 0) throw ConfigError("max_iterations must be non-negative");
  switch (cfg.kind) {
    case OptimizerKind::spsa: return minimize_spsa(f, std::move(x0), cfg);
    case OptimizerKind::cobyla: return minimize_cobyla(f, std::move(x0), cfg);
    default: return minimize_quasi_newton(f, std::move(x0), cfg);
  }
}

}  // namespace vqe
