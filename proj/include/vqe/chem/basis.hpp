// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "vqe/chem/molecule.hpp"

namespace vqe::chem {

/// A contracted Cartesian shell (s: l = 0, p: l = 1).
struct Shell {
  int atom = 0;
  int l = 0;
  Vec3 center{};  // Bohr
  std::vector<double> exponents;
  std::vector<double> coefficients;  // published contraction coefficients
};

/// One contracted Cartesian function x^lx y^ly z^lz sum_k c_k exp(-a_k r^2).
struct BasisFunction {
  int atom = 0;
  int shell = 0;
  Vec3 center{};
  std::array<int, 3> powers{};
  std::vector<double> exponents;
  /// Contraction coefficients with primitive and contraction normalization folded in.
  std::vector<double> coefficients;
};

/**
 * @brief STO-3G shells for a molecule and the derived normalized functions.
 *
 * Function order follows shell order; p shells expand to px, py, pz.
 */
struct ShellBasis {
  std::vector<Shell> shells;
  std::vector<BasisFunction> functions;

  std::size_t size() const noexcept { return functions.size(); }
};

/// Supported elements: H, He, Li, N, F, Cl. Throws BasisError otherwise.
ShellBasis sto3g_basis(const Molecule& m);

/// Self-overlap of a contracted function (1 for every function of sto3g_basis).
double self_overlap(const BasisFunction& f);

}  // namespace vqe::chem
