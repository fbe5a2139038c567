// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vqe/chem/basis.hpp"
#include "vqe/chem/integrals.hpp"

namespace vqe::chem {

struct ScfOptions {
  double density_tolerance = 1e-8;
  double energy_tolerance = 1e-10;
  int max_iterations = 200;
  /// Pulay extrapolation of the Fock matrix over this many past iterations (0 disables).
  int diis_size = 8;
  /// Iteration after which DIIS is dropped and density mixing switches on.
  int mixing_start = 100;
  double mixing = 0.5;
  /// Restarts along an unstable orbital-rotation mode of the singlet Hessian (0 disables).
  int stability_rounds = 5;
  double stability_threshold = 1e-5;
};

struct SCFResult {
  Eigen::MatrixXd coefficients;      // AO x MO, columns ordered by energy
  Eigen::VectorXd orbital_energies;  // ascending
  Eigen::MatrixXd density;           // total (alpha + beta) AO density
  double total_energy = 0.0;         // electronic + nuclear repulsion
  double nuclear_repulsion = 0.0;
  int n_occupied = 0;
  bool converged = false;
  int iterations = 0;
};

/**
 * @brief Restricted closed-shell Hartree-Fock.
 *
 * Roothaan iterations in the Loewdin-orthogonalized basis from a core
 * Hamiltonian guess, accelerated by DIIS on the FDS - SDF commutator.
 * Converged when max|dD| < 1e-8 and |dE| < 1e-10; throws ConvergenceError
 * (carrying the last energy) after max_iterations. A converged solution that
 * is a saddle point of the restricted energy is followed downhill and
 * reconverged.
 */
SCFResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options = {});

/**
 * @brief RHF from the core guess and from each supplied starting density.
 *
 * Every start is iterated with and without DIIS. Restricted Hartree-Fock has several local minima at stretched bonds; the
 * lowest converged solution is returned. Throws ConvergenceError only if no
 * start converges. `iterations` sums over all starts.
 */
SCFResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options,
                  const std::vector<Eigen::MatrixXd>& initial_densities);

/// Superposition of spherically averaged free-atom densities in the molecular basis.
Eigen::MatrixXd atomic_density_guess(const Molecule& m, const ShellBasis& b);

/**
 * @brief Density carried outward from a compressed copy of the molecule.
 *
 * The geometry is scaled about its centroid so the shortest bond starts at
 * `start_length` Angstrom, then stretched in `step` increments, each SCF
 * starting from the previous density. Empty when the shortest bond is already
 * within one step of `start_length`.
 */
std::optional<Eigen::MatrixXd> stretched_density_guess(const Molecule& m,
                                                       const ScfOptions& options = {},
                                                       double start_length = 1.0,
                                                       double step = 0.1);

/// Closed-shell two-electron matrix G(D) = J(D) - K(D)/2 for a total density D.
Eigen::MatrixXd two_electron_matrix(const EriTensor& eri, const Eigen::MatrixXd& density);

}  // namespace vqe::chem
