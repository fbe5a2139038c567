// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "vqe/chem/integrals.hpp"
#include "vqe/chem/molecule.hpp"
#include "vqe/chem/scf.hpp"
#include "vqe/fermion.hpp"

namespace vqe::chem {

/**
 * @brief Electronic Hamiltonian restricted to the active molecular orbitals.
 *
 * Spin orbitals use block order: alpha spin orbitals 0..m-1 map to active
 * spatial orbitals 0..m-1, beta spin orbitals m..2m-1 to the same spatial
 * orbitals. Integrals are stored per spatial orbital and expanded on access.
 */
struct ActiveSpaceHamiltonian {
  int n_spatial = 0;
  Eigen::MatrixXd one_body;  // h_pq over active spatial MOs, frozen-core field included
  EriTensor two_body;        // (pq|rs) over active spatial MOs
  double core_energy = 0.0;  // nuclear repulsion + frozen-core energy
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<int> active_orbitals;
  std::vector<int> frozen_orbitals;
  std::vector<int> removed_orbitals;

  int n_spin_orbitals() const noexcept { return 2 * n_spatial; }
  int n_electrons() const noexcept { return n_alpha + n_beta; }
  /// Spin-orbital one-body integral h_pq.
  double h(int p, int q) const;
  /// Spin-orbital two-body integral <pq|rs> = (pr|qs) with spin selection.
  double g(int p, int q, int r, int s) const;
};

/// Chemical-core spatial orbitals: H,He 0; Li-Ne 1; Na-Ar 5 per atom.
int frozen_core_count(const Molecule& m);

/**
 * @brief Freeze the lowest `n_frozen` MOs, drop `removed` MOs, transform the rest.
 *
 * Removed orbitals must be virtual. Throws ActiveSpaceError for overlapping
 * or invalid lists or an empty active space.
 */
ActiveSpaceHamiltonian build_active_hamiltonian(const SCFResult& scf, const IntegralSet& ints,
                                                int n_frozen,
                                                const std::vector<int>& removed = {});

/**
 * @brief Second-quantized Hamiltonian over active spin orbitals.
 *
 * H = core + sum_pq h_pq a+_p a_q + 1/2 sum_pqrs <pq|rs> a+_p a+_q a_s a_r.
 */
FermionOperator fermion_hamiltonian(const ActiveSpaceHamiltonian& h);

}  // namespace vqe::chem
