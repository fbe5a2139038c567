// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "vqe/chem/basis.hpp"
#include "vqe/chem/molecule.hpp"

namespace vqe::chem {

/// Two-electron integrals (ij|kl) in chemists' notation, dense n^4 storage.
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  /// Writes v to all eight index permutations of (ij|kl).
  void set_symmetric(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v);

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct IntegralSet {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  EriTensor eri;
  double nuclear_repulsion = 0.0;

  std::size_t n_ao() const noexcept { return static_cast<std::size_t>(overlap.rows()); }
  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

/**
 * @brief One- and two-electron integrals over the contracted basis.
 *
 * All four classes use the McMurchie-Davidson Hermite expansion; the Coulomb
 * classes contract Hermite integrals built from the Boys function.
 */
IntegralSet compute_integrals(const Molecule& m, const ShellBasis& b);

}  // namespace vqe::chem
