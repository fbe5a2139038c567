// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/vqe.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include <Eigen/Dense>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr double kSymmetryThreshold = 1e-6;

// Dense real-symmetric block of a real-coefficient Pauli sum on the given basis.
Eigen::MatrixXd sector_matrix(const PauliSum& h, const std::vector<std::uint64_t>& basis) {
  std::unordered_map<std::uint64_t, Eigen::Index> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], static_cast<Eigen::Index>(i));
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      const std::uint64_t b = basis[static_cast<std::size_t>(col)];
      auto it = where.find(b ^ t.word.x);
      if (it == where.end()) continue;
      m(it->second, col) += t.coefficient * t.word.phase_on(b);
    }
  }
  if (m.imag().cwiseAbs().maxCoeff() > 1e-10) {
    throw HermiticityError("sector block is not real");
  }
  return m.real();
}

}  // namespace

double vqe_energy(const PauliSum& h, const Circuit& ansatz, std::span<const double> theta) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw SizeError("Hamiltonian on " + std::to_string(h.n_qubits()) + " qubits, ansatz on " +
                    std::to_string(ansatz.n_qubits()));
  }
  return expectation(run_circuit(ansatz, theta), h);
}

VQEResult run_vqe(const PauliSum& h, const Circuit& ansatz, const OptimizerConfig& cfg) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw SizeError("Hamiltonian on " + std::to_string(h.n_qubits()) + " qubits, ansatz on " +
                    std::to_string(ansatz.n_qubits()));
  }
  if (ansatz.n_parameters() == 0) throw AnsatzError("ansatz has no free parameters");
  const double offset = h.identity_coefficient().real();
  const PauliSum body = h.without_identity();
  ObjectiveHandle f([&](std::span<const double> theta) {
    return expectation(run_circuit(ansatz, theta), body);
  });
  std::vector<double> x0(static_cast<std::size_t>(ansatz.n_parameters()), 0.0);

  const auto start = std::chrono::steady_clock::now();
  VQEResult result;
  result.trace = minimize(f, std::move(x0), cfg);
  auto& trace = result.trace;
  if (!trace.final_x.empty()) {
    // Readout at an iterate the optimizer never evaluated (SPSA).
    f(trace.final_x);
    trace.best_x = f.best_point();
    trace.best_value = f.best_value();
    trace.n_evaluations = f.evaluations();
  }
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (auto& rec : result.trace.iterations) rec.value += offset;
  result.trace.best_value += offset;
  result.energy = result.trace.best_value;
  result.parameters = result.trace.best_x;
  return result;
}

double exact_ground_energy(const PauliSum& h) {
  if (!h.is_hermitian()) throw HermiticityError("exact solver requires a Hermitian sum");
  const Eigen::MatrixXcd m = to_dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed");
  return es.eigenvalues()(0);
}

std::vector<std::uint64_t> sector_basis(const Sector& sector) {
  const MappingConfig& cfg = sector.mapping;
  const int nq = cfg.n_qubits(sector.n_modes);
  if (nq > kMaxStateQubits) throw SizeError("sector register too large");
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << nq;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto [na, nb] = count_spins(decode_occupation(b, sector.n_modes, cfg), sector.n_modes);
    if (na == cfg.n_alpha && nb == cfg.n_beta) out.push_back(b);
  }
  return out;
}

double exact_ground_energy(const PauliSum& h, const Sector& sector) {
  if (!h.is_hermitian()) throw HermiticityError("exact solver requires a Hermitian sum");
  if (h.n_qubits() != sector.mapping.n_qubits(sector.n_modes)) {
    throw SizeError("sector register does not match the Hamiltonian");
  }
  const auto basis = sector_basis(sector);
  if (basis.empty()) throw OccupationError("particle sector is empty");
  const Eigen::MatrixXd hm = sector_matrix(h, basis);
  if (sector.filter == SpinFilter::none) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hm, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }
  // Symmetry operator on the sector and the eigenvalue to keep.
  Eigen::MatrixXd sym;
  double target = 0.0;
  if (sector.filter == SpinFilter::singlet) {
    sym = sector_matrix(map_fermion(spin_squared(sector.n_modes), sector.mapping), basis);
  } else {
    if (sector.mapping.n_alpha != sector.mapping.n_beta) {
      throw OccupationError("spin-flip parity needs equal alpha and beta counts");
    }
    std::unordered_map<std::uint64_t, Eigen::Index> where;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      where.emplace(basis[i], static_cast<Eigen::Index>(i));
    }
    const auto dim = static_cast<Eigen::Index>(basis.size());
    sym = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto occ = decode_occupation(basis[static_cast<std::size_t>(col)], sector.n_modes,
                                         sector.mapping);
      int sign = 1;
      const auto flipped = spin_flip_occupation(occ, sector.n_modes, &sign);
      const auto row = where.at(encode_occupation(flipped, sector.n_modes, sector.mapping));
      sym(row, col) = sign;
    }
    int hf_sign = 1;
    spin_flip_occupation(hartree_fock_occupation(sector.n_modes, sector.mapping.n_alpha,
                                                 sector.mapping.n_beta),
                         sector.n_modes, &hf_sign);
    target = hf_sign;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spin(sym);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < spin.eigenvalues().size(); ++i) {
    if (std::abs(spin.eigenvalues()(i) - target) < kSymmetryThreshold) keep.push_back(i);
  }
  if (keep.empty()) throw OccupationError("sector holds no state with the requested spin symmetry");
  Eigen::MatrixXd v(hm.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    v.col(static_cast<Eigen::Index>(k)) = spin.eigenvectors().col(keep[k]);
  }
  const Eigen::MatrixXd projected = v.transpose() * hm * v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

FermionOperator spin_squared(int n_modes) {
  if (n_modes % 2 != 0) throw OccupationError("spin-orbital count must be even");
  const int m = n_modes / 2;
  FermionOperator s2(n_modes);
  // S- S+ = sum_kl a+_kb a_ka a+_la a_lb
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      s2.add(1.0, {create(m + k), annihilate(k), create(l), annihilate(m + l)});
  // Sz^2 + Sz with Sz = 1/2 sum_k (n_ka - n_kb)
  auto n_op = [](int p) { return std::vector<LadderOp>{create(p), annihilate(p)}; };
  for (int k = 0; k < m; ++k) {
    s2.add(0.5, n_op(k));
    s2.add(-0.5, n_op(m + k));
    for (int l = 0; l < m; ++l) {
      for (int sk = 0; sk < 2; ++sk)
        for (int sl = 0; sl < 2; ++sl) {
          auto ops = n_op(sk * m + k);
          const auto second = n_op(sl * m + l);
          ops.insert(ops.end(), second.begin(), second.end());
          s2.add(sk == sl ? 0.25 : -0.25, ops);
        }
    }
  }
  return s2;
}

}  // namespace vqe
