// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/pipeline.hpp"

#include <chrono>

#include "vqe/chem/basis.hpp"
#include "vqe/chem/integrals.hpp"
#include "vqe/error.hpp"
#include "vqe/fermion.hpp"

namespace vqe {

std::string to_string(ExactMode m) {
  switch (m) {
    case ExactMode::full: return "full";
    case ExactMode::sector: return "sector";
    case ExactMode::spin_flip: return "spin_flip";
    default: return "singlet";
  }
}

ExactMode parse_exact_mode(const std::string& text) {
  if (text == "full") return ExactMode::full;
  if (text == "sector") return ExactMode::sector;
  if (text == "spin_flip") return ExactMode::spin_flip;
  if (text == "singlet") return ExactMode::singlet;
  throw ConfigError("unknown exact mode '" + text +
                    "' (expected full, sector, spin_flip or singlet)");
}

OptimizerConfig scan_optimizer_defaults(OptimizerKind kind) {
  OptimizerConfig o;
  o.kind = kind;
  o.tolerance = 1e-8;
  switch (kind) {
    case OptimizerKind::spsa: o.max_iterations = 400; break;
    case OptimizerKind::cobyla: o.max_iterations = 5000; break;
    case OptimizerKind::quasi_newton: o.max_iterations = 500; break;
  }
  return o;
}

QubitProblem build_problem(const chem::Molecule& molecule, const PipelineConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  molecule.validate();
  const auto basis = chem::sto3g_basis(molecule);
  const auto ints = chem::compute_integrals(molecule, basis);
  QubitProblem p;
  p.molecule = molecule;
  std::vector<Eigen::MatrixXd> guesses{chem::atomic_density_guess(molecule, basis)};
  if (auto stretched = chem::stretched_density_guess(molecule, cfg.scf)) {
    guesses.push_back(std::move(*stretched));
  }
  p.scf = chem::run_rhf(ints, molecule.n_electrons(), cfg.scf, guesses);
  const int n_frozen = cfg.freeze_core ? chem::frozen_core_count(molecule) : 0;
  p.active = chem::build_active_hamiltonian(p.scf, ints, n_frozen, cfg.remove_orbitals);

  p.mapping.scheme = cfg.mapping;
  p.mapping.two_qubit_reduction = cfg.two_qubit_reduction;
  p.mapping.n_alpha = p.active.n_alpha;
  p.mapping.n_beta = p.active.n_beta;
  p.hamiltonian = map_fermion(chem::fermion_hamiltonian(p.active), p.mapping);

  AnsatzSpec spec;
  spec.kind = cfg.ansatz;
  spec.n_spin_orbitals = p.n_modes();
  spec.mapping = p.mapping;
  spec.n_qubits = p.mapping.n_qubits(p.n_modes());
  spec.depth = cfg.hwe_depth;
  spec.hf_initial_state = true;
  spec.spin_paired = cfg.spin_paired && p.active.n_alpha == p.active.n_beta;
  if (spec.kind == AnsatzKind::single_qubit_u3) {
    throw ConfigError("the single-qubit U3 form does not apply to molecular problems");
  }
  p.ansatz = build_ansatz(spec);
  p.build_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return p;
}

double exact_energy(const QubitProblem& p, ExactMode mode) {
  if (mode == ExactMode::full) return exact_ground_energy(p.hamiltonian);
  Sector s;
  s.n_modes = p.n_modes();
  s.mapping = p.mapping;
  const bool closed = p.mapping.n_alpha == p.mapping.n_beta;
  if (closed && mode == ExactMode::singlet) s.filter = SpinFilter::singlet;
  if (closed && mode == ExactMode::spin_flip) s.filter = SpinFilter::spin_flip;
  return exact_ground_energy(p.hamiltonian, s);
}

}  // namespace vqe
