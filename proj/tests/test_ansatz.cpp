// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vqe/ansatz.hpp"
#include "vqe/chem/active_space.hpp"
#include "vqe/chem/basis.hpp"
#include "vqe/chem/integrals.hpp"
#include "vqe/chem/scf.hpp"
#include "vqe/error.hpp"
#include "vqe/vqe.hpp"

namespace vqe {
namespace {

struct Molecular {
  chem::SCFResult scf;
  chem::ActiveSpaceHamiltonian active;
  FermionOperator fermion{1};
};

Molecular molecular(const char* a, const char* b, double d) {
  const auto m = chem::build_diatomic(a, b, d);
  const auto basis = chem::sto3g_basis(m);
  const auto ints = chem::compute_integrals(m, basis);
  Molecular out;
  out.scf = chem::run_rhf(ints, m.n_electrons());
  out.active = chem::build_active_hamiltonian(out.scf, ints, chem::frozen_core_count(m));
  out.fermion = chem::fermion_hamiltonian(out.active);
  return out;
}

MappingConfig config(MappingScheme scheme, bool reduce, int na, int nb) {
  MappingConfig c;
  c.scheme = scheme;
  c.two_qubit_reduction = reduce;
  c.n_alpha = na;
  c.n_beta = nb;
  return c;
}

int count_cnots(const Circuit& c) {
  int n = 0;
  for (const auto& g : c.gates()) n += std::holds_alternative<CnotGate>(g);
  return n;
}

TEST(Excitations, H2Counts) {
  const auto ex = uccsd_excitations(4, 1, 1);
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].name(), "s_0_1");
  EXPECT_EQ(ex[1].name(), "s_2_3");
  EXPECT_EQ(ex[2].name(), "d_0_2_1_3");
}

TEST(Excitations, LiHCounts) {
  // One alpha and one beta electron in five spatial orbitals.
  EXPECT_EQ(uccsd_excitations(10, 1, 1).size(), 8u + 16u);
  EXPECT_EQ(uccsd_parameter_groups(10, 1, 1, true).size(), 4u + 10u);
  // Four of each spin in five spatial orbitals leave one virtual per spin.
  EXPECT_EQ(uccsd_excitations(10, 4, 4).size(), 8u + 16u);
  // Three of each: 6+6 singles, 3+3 same-spin and 36 mixed doubles.
  EXPECT_EQ(uccsd_excitations(10, 3, 3).size(), 12u + 6u + 36u);
}

TEST(Excitations, SpinFlipIsAnInvolution) {
  for (const auto& e : uccsd_excitations(10, 2, 2)) {
    const auto back = spin_flip(spin_flip(e, 10), 10);
    EXPECT_EQ(back.from, e.from);
    EXPECT_EQ(back.to, e.to);
  }
  EXPECT_THROW(uccsd_parameter_groups(6, 2, 1, true), AnsatzError);
}

TEST(Excitations, GeneratorIsAntiHermitian) {
  for (const auto& e : uccsd_excitations(6, 1, 1)) {
    const auto g = e.generator(6);
    FermionOperator sum = g;
    sum += g.adjoint();
    EXPECT_TRUE(sum.normal_ordered().terms().empty()) << e.name();
  }
}

TEST(HartreeFock, JordanWignerBitPattern) {
  const auto c = hartree_fock_circuit(4, config(MappingScheme::jordan_wigner, false, 1, 1));
  EXPECT_EQ(c.initial_state(), 0b0101u);
  EXPECT_EQ(c.n_parameters(), 0);
}

TEST(HartreeFock, ParityBitPattern) {
  const auto c = hartree_fock_circuit(4, config(MappingScheme::parity, false, 1, 1));
  // Prefix parities of occupation 0101: 1, 1, 0, 0.
  EXPECT_EQ(c.initial_state(), 0b0011u);
  const auto r = hartree_fock_circuit(4, config(MappingScheme::parity, true, 1, 1));
  EXPECT_EQ(r.n_qubits(), 2);
  EXPECT_EQ(r.initial_state(), 0b01u);
}

TEST(HartreeFock, EmptyAndOverfull) {
  EXPECT_EQ(hartree_fock_circuit(4, config(MappingScheme::jordan_wigner, false, 0, 0)).initial_state(), 0u);
  EXPECT_THROW(hartree_fock_circuit(4, config(MappingScheme::jordan_wigner, false, 3, 0)), OccupationError);
}

TEST(Uccsd, ParameterAndRotationCounts) {
  const auto c = uccsd_circuit(4, config(MappingScheme::jordan_wigner, false, 1, 1));
  EXPECT_EQ(c.n_parameters(), 3);
  EXPECT_EQ(c.gates().size(), 2u + 2u + 8u);
  const auto paired = uccsd_circuit(4, config(MappingScheme::parity, true, 1, 1), true);
  EXPECT_EQ(paired.n_parameters(), 2);
  AnsatzSpec spec;
  spec.n_spin_orbitals = 4;
  spec.mapping = config(MappingScheme::parity, true, 1, 1);
  EXPECT_EQ(spec.parameter_count(), 3);
  spec.spin_paired = true;
  EXPECT_EQ(spec.parameter_count(), 2);
}

TEST(Uccsd, NoExcitationsThrows) {
  EXPECT_THROW(uccsd_circuit(4, config(MappingScheme::jordan_wigner, false, 2, 2)), AnsatzError);
}

TEST(Uccsd, ZeroParametersGiveHartreeFockState) {
  for (bool reduce : {false, true}) {
    const auto cfg = config(reduce ? MappingScheme::parity : MappingScheme::jordan_wigner, reduce, 2, 2);
    const auto c = uccsd_circuit(8, cfg, true);
    const auto psi = run_circuit(c, std::vector<double>(static_cast<std::size_t>(c.n_parameters()), 0.0));
    EXPECT_NEAR(std::abs(psi[c.initial_state()]), 1.0, 1e-15);
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  }
}

// HF energy through the qubit pipeline equals the SCF total energy.
TEST(Uccsd, ZeroParameterEnergyIsScfEnergy) {
  struct Case {
    const char* a;
    const char* b;
    double d;
  };
  for (const auto& k : {Case{"H", "H", 0.7414}, Case{"Li", "H", 1.6}, Case{"F", "H", 1.0},
                        Case{"N", "H", 1.1}, Case{"H", "Cl", 1.3}}) {
    const auto m = molecular(k.a, k.b, k.d);
    for (bool reduce : {false, true}) {
      const auto cfg = config(reduce ? MappingScheme::parity : MappingScheme::jordan_wigner, reduce,
                              m.active.n_alpha, m.active.n_beta);
      const auto h = map_fermion(m.fermion, cfg);
      const auto c = uccsd_circuit(m.active.n_spin_orbitals(), cfg, true);
      const std::vector<double> zero(static_cast<std::size_t>(c.n_parameters()), 0.0);
      EXPECT_NEAR(vqe_energy(h, c, zero), m.scf.total_energy, 1e-8) << k.a << k.b;
    }
  }
}

TEST(Uccsd, RandomParametersPreserveNorm) {
  std::mt19937_64 rng(31);
  const auto c = uccsd_circuit(8, config(MappingScheme::parity, true, 2, 2), true);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> theta;
    for (int k = 0; k < c.n_parameters(); ++k) theta.push_back(oracle::uniform(rng, -3, 3));
    EXPECT_NEAR(run_circuit(c, theta).norm_squared(), 1.0, 1e-10);
  }
}

// Amplitudes of the spin-paired state obey psi(flip(occ)) * sign = s_HF * psi(occ).
TEST(Uccsd, SpinPairedStateIsSpinFlipEigenstate) {
  std::mt19937_64 rng(32);
  const int n = 10;
  const auto cfg = config(MappingScheme::jordan_wigner, false, 2, 2);
  const auto c = uccsd_circuit(n, cfg, true);
  int hf_sign = 0;
  spin_flip_occupation(c.initial_state(), n, &hf_sign);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> theta;
    for (int k = 0; k < c.n_parameters(); ++k) theta.push_back(oracle::uniform(rng, -1, 1));
    const auto psi = run_circuit(c, theta);
    double worst = 0.0;
    for (std::uint64_t b = 0; b < psi.dimension(); ++b) {
      int sign = 0;
      const auto f = spin_flip_occupation(b, n, &sign);
      worst = std::max(worst, std::abs(psi[f] * double(sign) - double(hf_sign) * psi[b]));
    }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(Uccsd, H2ReachesExactGroundEnergy) {
  const auto m = molecular("H", "H", 0.7);
  OptimizerConfig opt;
  opt.tolerance = 1e-8;
  std::vector<double> energies;
  for (auto scheme : {MappingScheme::jordan_wigner, MappingScheme::parity}) {
    for (bool reduce : {false, true}) {
      if (reduce && scheme == MappingScheme::jordan_wigner) continue;
      for (bool paired : {false, true}) {
        const auto cfg = config(scheme, reduce, 1, 1);
        const auto h = map_fermion(m.fermion, cfg);
        const auto r = run_vqe(h, uccsd_circuit(4, cfg, paired), opt);
        EXPECT_NEAR(r.energy, -1.1361894507, 1e-6);
        energies.push_back(r.energy);
      }
    }
  }
  for (double e : energies) EXPECT_NEAR(e, energies.front(), 1e-7);
}

TEST(HardwareEfficient, Counts) {
  const auto single = hardware_efficient_circuit(1, 0);
  EXPECT_EQ(single.n_parameters(), 3);
  EXPECT_EQ(count_cnots(single), 0);
  const auto two = hardware_efficient_circuit(2, 1);
  EXPECT_EQ(two.n_parameters(), 12);
  EXPECT_EQ(count_cnots(two), 1);
  EXPECT_EQ(hardware_efficient_circuit(4, 3).n_parameters(), 3 * 4 * 4);
  EXPECT_THROW(hardware_efficient_circuit(2, -1), AnsatzError);
  AnsatzSpec spec;
  spec.kind = AnsatzKind::hardware_efficient;
  spec.n_qubits = 3;
  spec.depth = 2;
  EXPECT_EQ(spec.parameter_count(), 27);
  EXPECT_EQ(build_ansatz(spec).n_parameters(), 27);
  spec.kind = AnsatzKind::single_qubit_u3;
  EXPECT_EQ(spec.parameter_count(), 3);
}

TEST(HardwareEfficient, ZeroParametersAreIdentity) {
  const auto c = hardware_efficient_circuit(3, 2);
  const auto psi = run_circuit(c, std::vector<double>(27, 0.0));
  EXPECT_NEAR(std::abs(psi[0]), 1.0, 1e-15);
}

TEST(HardwareEfficient, SingleQubitFormIsU3) {
  const auto c = hardware_efficient_circuit(1, 0);
  const double pi = std::numbers::pi;
  const auto psi = run_circuit(c, {{"theta_0_0", pi}, {"phi_0_0", 0.0}, {"lambda_0_0", pi}});
  EXPECT_NEAR(std::abs(psi[1]), 1.0, 1e-15);
}

TEST(AnsatzKind, Parse) {
  EXPECT_EQ(parse_ansatz_kind("uccsd"), AnsatzKind::uccsd);
  EXPECT_EQ(parse_ansatz_kind("hwe"), AnsatzKind::hardware_efficient);
  EXPECT_EQ(parse_ansatz_kind("u3"), AnsatzKind::single_qubit_u3);
  EXPECT_THROW(parse_ansatz_kind("adapt"), ConfigError);
}

}  // namespace
}  // namespace vqe
