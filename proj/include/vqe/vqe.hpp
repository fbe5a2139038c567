// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vqe/ansatz.hpp"
#include "vqe/mapping.hpp"
#include "vqe/optimizers.hpp"
#include "vqe/pauli.hpp"
#include "vqe/statevector.hpp"

namespace vqe {

/// <psi(theta)|H|psi(theta)>, identity weight included.
double vqe_energy(const PauliSum& h, const Circuit& ansatz, std::span<const double> theta);

struct VQEResult {
  double energy = 0.0;  // best energy seen
  std::vector<double> parameters;
  OptimizationTrace trace;
  std::optional<double> exact_energy;
  double wall_time_s = 0.0;  // optimizer loop only

  long n_evaluations() const noexcept { return trace.n_evaluations; }
  std::optional<double> gap() const {
    if (!exact_energy) return std::nullopt;
    return energy - *exact_energy;
  }
};

/**
 * @brief Minimize the ansatz energy from all-zero parameters.
 *
 * The optimizer sees the energy without the identity weight; the weight is
 * added back to every reported value. An unevaluated final iterate (SPSA) gets
 * one extra counted readout, and the lower of it and the best probe is kept.
 */
VQEResult run_vqe(const PauliSum& h, const Circuit& ansatz, const OptimizerConfig& cfg);

/// Smallest eigenvalue of the dense matrix (at most 14 qubits).
double exact_ground_energy(const PauliSum& h);

enum class SpinFilter {
  none,
  spin_flip,  // same alpha/beta exchange parity as the reference determinant
  singlet,    // S = 0
};

/// Restricts the exact solver to fixed (N_alpha, N_beta) plus an optional spin filter.
struct Sector {
  int n_modes = 0;
  MappingConfig mapping;
  SpinFilter filter = SpinFilter::none;
};

/// Basis indices whose decoded occupation has the sector's particle counts.
std::vector<std::uint64_t> sector_basis(const Sector& sector);

/// Smallest eigenvalue of h within the sector.
double exact_ground_energy(const PauliSum& h, const Sector& sector);

/// Total spin S^2 over n_modes spin orbitals in block order.
FermionOperator spin_squared(int n_modes);

}  // namespace vqe
