// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vqe/ansatz.hpp"
#include "vqe/chem/active_space.hpp"
#include "vqe/chem/molecule.hpp"
#include "vqe/chem/scf.hpp"
#include "vqe/mapping.hpp"
#include "vqe/optimizers.hpp"
#include "vqe/pauli.hpp"
#include "vqe/vqe.hpp"

namespace vqe {

/// Which eigenvalue the exact reference reports.
enum class ExactMode {
  full,     // whole register
  sector,   // reference (N_alpha, N_beta) only
  spin_flip,  // reference particle counts and alpha/beta exchange parity
  singlet,  // reference particle counts and S = 0
};

std::string to_string(ExactMode m);
ExactMode parse_exact_mode(const std::string& text);

struct PipelineConfig {
  MappingScheme mapping = MappingScheme::parity;
  bool two_qubit_reduction = true;
  bool freeze_core = true;
  std::vector<int> remove_orbitals;
  AnsatzKind ansatz = AnsatzKind::uccsd;
  int hwe_depth = 1;
  /// Tie spin-flip image excitations (closed-shell references).
  bool spin_paired = true;
  OptimizerConfig optimizer;
  chem::ScfOptions scf;
  ExactMode exact = ExactMode::spin_flip;
};

/// Optimizer settings used by the command-line scans: gradient tolerance 1e-8 and
/// iteration budgets qn 500, cobyla 5000, spsa 400.
OptimizerConfig scan_optimizer_defaults(OptimizerKind kind);

/// Everything between geometry and the variational loop.
struct QubitProblem {
  chem::Molecule molecule;
  chem::SCFResult scf;
  chem::ActiveSpaceHamiltonian active;
  MappingConfig mapping;
  PauliSum hamiltonian;
  Circuit ansatz{1};
  double build_time_s = 0.0;

  int n_modes() const noexcept { return active.n_spin_orbitals(); }
  int n_qubits() const noexcept { return hamiltonian.n_qubits(); }
};

/// Integrals, RHF, active space, mapping and ansatz. SCF failures propagate.
QubitProblem build_problem(const chem::Molecule& molecule, const PipelineConfig& cfg);

/// Exact reference of the mapped Hamiltonian.
double exact_energy(const QubitProblem& p, ExactMode mode);

}  // namespace vqe
