// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vqe/chem/active_space.hpp"
#include "vqe/chem/basis.hpp"
#include "vqe/chem/integrals.hpp"
#include "vqe/chem/scf.hpp"
#include "vqe/error.hpp"
#include "vqe/fermion.hpp"
#include "vqe/mapping.hpp"
#include "vqe/vqe.hpp"

namespace vqe {
namespace {

FermionOperator molecular(const char* a, const char* b, double d, chem::ActiveSpaceHamiltonian* out = nullptr) {
  const auto m = chem::build_diatomic(a, b, d);
  const auto basis = chem::sto3g_basis(m);
  const auto ints = chem::compute_integrals(m, basis);
  const auto scf = chem::run_rhf(ints, m.n_electrons());
  auto h = chem::build_active_hamiltonian(scf, ints, chem::frozen_core_count(m));
  if (out) *out = h;
  return chem::fermion_hamiltonian(h);
}

double sector_ground_from_fock(const Eigen::MatrixXcd& fock, int n_modes, int na, int nb) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index b = 0; b < fock.rows(); ++b) {
    if (count_spins(static_cast<std::uint64_t>(b), n_modes) == std::pair{na, nb}) idx.push_back(b);
  }
  Eigen::MatrixXcd sub(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = fock(idx[i], idx[j]);
  return oracle::sorted_eigenvalues(sub)(0);
}

MappingConfig parity_cfg(bool reduce = false, int na = 0, int nb = 0) {
  MappingConfig c;
  c.scheme = MappingScheme::parity;
  c.two_qubit_reduction = reduce;
  c.n_alpha = na;
  c.n_beta = nb;
  return c;
}

MappingConfig jw_cfg() {
  MappingConfig c;
  c.scheme = MappingScheme::jordan_wigner;
  return c;
}

void expect_sum(const PauliSum& s, std::initializer_list<std::pair<double, const char*>> terms) {
  PauliSum expected(s.n_qubits());
  for (const auto& [c, l] : terms) expected.add(c, l);
  const auto diff = simplify(s + expected * Complex{-1.0, 0.0});
  EXPECT_TRUE(diff.empty()) << to_pauli_text(simplify(s));
}

TEST(FermionOperator, NormalOrderingPreservesOperator) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_hermitian_fermion(rng, 3, 4);
    const auto g = f.normal_ordered();
    EXPECT_LT((oracle::fock_matrix(f) - oracle::fock_matrix(g)).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto& t : g.terms()) {
      bool seen_annihilator = false;
      for (std::size_t k = 0; k < t.ops.size(); ++k) {
        if (!t.ops[k].dagger) seen_annihilator = true;
        EXPECT_FALSE(seen_annihilator && t.ops[k].dagger);
        if (k > 0 && t.ops[k].dagger == t.ops[k - 1].dagger) {
          EXPECT_GT(t.ops[k - 1].mode, t.ops[k].mode);
        }
      }
    }
  }
}

TEST(FermionOperator, AnticommutationAndAdjoint) {
  FermionOperator f(2);
  f.add(1.0, {create(0), annihilate(1)});
  f.add(1.0, {annihilate(1), create(0)});
  EXPECT_TRUE(f.normal_ordered().terms().empty());
  FermionOperator g(2);
  g.add(2.0, {create(1), annihilate(0)});
  FermionOperator h(2);
  h.add(2.0, {create(0), annihilate(1)});
  EXPECT_TRUE(equivalent(g.adjoint(), h));
  EXPECT_THROW(g.add(1.0, {create(2)}), IndexError);
}

TEST(JordanWigner, NumberOperator) {
  FermionOperator n(1);
  n.add(1.0, {create(0), annihilate(0)});
  expect_sum(jordan_wigner(n), {{0.5, "I"}, {-0.5, "Z"}});
}

TEST(JordanWigner, Hopping) {
  FermionOperator hop(2);
  hop.add(1.0, {create(0), annihilate(1)});
  hop.add(1.0, {create(1), annihilate(0)});
  expect_sum(jordan_wigner(hop), {{0.5, "XX"}, {0.5, "YY"}});
}

TEST(JordanWigner, MatchesFockSpaceOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto f = oracle::random_hermitian_fermion(rng, n, 5);
    const auto p = jordan_wigner(f);
    EXPECT_LT(p.max_imaginary(), 1e-12);
    EXPECT_LT((to_dense_matrix(p) - oracle::fock_matrix(f)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(JordanWigner, H2GroundMatchesFockSpace) {
  const auto f = molecular("H", "H", 0.7);
  const auto jw = jordan_wigner(f);
  EXPECT_EQ(jw.n_qubits(), 4);
  const double fock = oracle::sorted_eigenvalues(oracle::fock_matrix(f))(0);
  EXPECT_NEAR(oracle::sorted_eigenvalues(to_dense_matrix(jw))(0), fock, 1e-10);
  EXPECT_NEAR(fock, -1.1361894507, 1e-9);
}

TEST(Parity, NumberOperatorOnOneMode) {
  FermionOperator n(1);
  n.add(1.0, {create(0), annihilate(0)});
  expect_sum(parity_map(n), {{0.5, "I"}, {-0.5, "Z"}});
}

TEST(Parity, SpectrumEqualsJordanWigner) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_hermitian_fermion(rng, 3, 6);
    const auto jw = oracle::sorted_eigenvalues(to_dense_matrix(jordan_wigner(f)));
    const auto par = parity_map(f);
    EXPECT_LT(par.max_imaginary(), 1e-12);
    const auto pe = oracle::sorted_eigenvalues(to_dense_matrix(par));
    EXPECT_LT((jw - pe).cwiseAbs().maxCoeff(), 1e-10);
  }
}

// Parity image in the encoded basis reproduces the Fock matrix entry by entry.
TEST(Parity, MatrixElementsFollowEncoding) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto f = oracle::random_hermitian_fermion(rng, n, 5);
    const auto fock = oracle::fock_matrix(f);
    const auto par = to_dense_matrix(parity_map(f));
    MappingConfig cfg = parity_cfg();
    double worst = 0.0;
    for (Eigen::Index a = 0; a < fock.rows(); ++a)
      for (Eigen::Index b = 0; b < fock.cols(); ++b) {
        const auto ea = static_cast<Eigen::Index>(encode_occupation(static_cast<std::uint64_t>(a), n, cfg));
        const auto eb = static_cast<Eigen::Index>(encode_occupation(static_cast<std::uint64_t>(b), n, cfg));
        worst = std::max(worst, std::abs(par(ea, eb) - fock(a, b)));
      }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(Occupation, PrefixParityEncoding) {
  EXPECT_EQ(encode_occupation(0b0011, 4, parity_cfg()), 0b0001u);
  EXPECT_EQ(encode_occupation(0b0101, 4, parity_cfg()), 0b0011u);
  EXPECT_EQ(encode_occupation(0b0101, 4, jw_cfg()), 0b0101u);
  for (std::uint64_t occ = 0; occ < 64; ++occ) {
    EXPECT_EQ(decode_occupation(encode_occupation(occ, 6, parity_cfg()), 6, parity_cfg()), occ);
  }
}

TEST(Occupation, ReducedEncodingRoundTrip) {
  for (std::uint64_t occ = 0; occ < 256; ++occ) {
    const auto [na, nb] = count_spins(occ, 8);
    const auto cfg = parity_cfg(true, na, nb);
    const auto enc = encode_occupation(occ, 8, cfg);
    EXPECT_LT(enc, 64u);
    EXPECT_EQ(decode_occupation(enc, 8, cfg), occ);
  }
}

TEST(Occupation, HartreeFockAndSpinFlip) {
  EXPECT_EQ(hartree_fock_occupation(4, 1, 1), 0b0101u);
  EXPECT_EQ(hartree_fock_occupation(10, 4, 4), 0b0111101111u);
  EXPECT_THROW(hartree_fock_occupation(4, 3, 0), OccupationError);
  EXPECT_THROW(hartree_fock_occupation(5, 1, 1), OccupationError);
  int sign = 0;
  EXPECT_EQ(spin_flip_occupation(0b0001, 4, &sign), 0b0100u);
  EXPECT_EQ(sign, 1);
  EXPECT_EQ(spin_flip_occupation(0b0110, 4, &sign), 0b1001u);
  EXPECT_EQ(sign, -1);
  EXPECT_EQ(count_spins(0b110101, 6), (std::pair{2, 2}));
}

TEST(Majorana, WordsMatchLadderImages) {
  for (auto scheme : {MappingScheme::jordan_wigner, MappingScheme::parity}) {
    for (int p = 0; p < 4; ++p) {
      FermionOperator even(4);
      even.add(1.0, {annihilate(p)});
      even.add(1.0, {create(p)});
      FermionOperator odd_plus(4);
      odd_plus.add(1.0, {create(p)});
      odd_plus.add(-1.0, {annihilate(p)});
      auto map = [&](const FermionOperator& f) {
        return scheme == MappingScheme::parity ? parity_map(f) : jordan_wigner(f);
      };
      const auto e = map(even);
      ASSERT_EQ(e.size(), 1u);
      EXPECT_EQ(e.terms()[0].word, majorana_string(2 * p, 4, scheme));
      EXPECT_LT(std::abs(e.terms()[0].coefficient - 1.0), 1e-15);
      const auto o = map(odd_plus) * Complex{0.0, 1.0};
      ASSERT_EQ(o.size(), 1u);
      EXPECT_EQ(o.terms()[0].word, majorana_string(2 * p + 1, 4, scheme));
      EXPECT_LT(std::abs(o.terms()[0].coefficient - 1.0), 1e-15);
    }
  }
  EXPECT_THROW(majorana_string(8, 4, MappingScheme::parity), IndexError);
}

TEST(MappingConfig, Validation) {
  MappingConfig jw = jw_cfg();
  jw.two_qubit_reduction = true;
  EXPECT_THROW(jw.validate(4), ConfigError);
  EXPECT_THROW(parity_cfg(true, 1, 1).validate(5), ConfigError);
  EXPECT_NO_THROW(parity_cfg(true, 1, 1).validate(4));
  EXPECT_EQ(parity_cfg(true).n_qubits(12), 10);
  EXPECT_EQ(parse_mapping_scheme("jw"), MappingScheme::jordan_wigner);
  EXPECT_EQ(parse_mapping_scheme("parity"), MappingScheme::parity);
  EXPECT_THROW(parse_mapping_scheme("bk"), ConfigError);
}

TEST(Reduction, IdentityAndParityQubits) {
  expect_sum(two_qubit_reduction(PauliSum::identity(4, 2.5), 1, 1), {{2.5, "II"}});
  // Qubit 1 holds the alpha parity (odd for one alpha electron), qubit 3 the total parity.
  expect_sum(two_qubit_reduction(PauliSum(4, {PauliTerm{1.0, "IIZI"}}), 1, 1), {{-1.0, "II"}});
  expect_sum(two_qubit_reduction(PauliSum(4, {PauliTerm{1.0, "ZIII"}}), 1, 1), {{1.0, "II"}});
  expect_sum(two_qubit_reduction(PauliSum(4, {PauliTerm{1.0, "ZIII"}}), 1, 0), {{-1.0, "II"}});
  expect_sum(two_qubit_reduction(PauliSum(4, {PauliTerm{0.5, "ZXZY"}}), 2, 1), {{-0.5, "XY"}});
}

TEST(Reduction, RejectsSectorViolations) {
  EXPECT_THROW(two_qubit_reduction(PauliSum(4, {PauliTerm{1.0, "IIXI"}}), 1, 1),
               SectorViolationError);
  EXPECT_THROW(two_qubit_reduction(PauliSum(4, {PauliTerm{1.0, "YIII"}}), 1, 1),
               SectorViolationError);
  FermionOperator pairing(4);
  pairing.add(1.0, {create(0), create(2)});
  pairing.add(1.0, {annihilate(2), annihilate(0)});
  EXPECT_THROW(map_fermion(pairing, parity_cfg(true, 1, 1)), SectorViolationError);
}

// Sector-restricted ground energy before reduction equals the full ground energy after.
TEST(Reduction, PreservesSectorGroundEnergy) {
  struct Case {
    const char* a;
    const char* b;
    double d;
  };
  for (const auto& c : {Case{"H", "H", 0.7}, Case{"H", "H", 2.5}, Case{"Li", "H", 1.6},
                        Case{"Li", "H", 3.0}, Case{"F", "H", 1.0}}) {
    chem::ActiveSpaceHamiltonian h;
    const auto f = molecular(c.a, c.b, c.d, &h);
    const int n = f.n_modes();
    const double sector = sector_ground_from_fock(oracle::fock_matrix(f), n, h.n_alpha, h.n_beta);
    const auto reduced = map_fermion(f, parity_cfg(true, h.n_alpha, h.n_beta));
    EXPECT_EQ(reduced.n_qubits(), n - 2);
    EXPECT_NEAR(oracle::sorted_eigenvalues(to_dense_matrix(reduced))(0), sector, 1e-10)
        << c.a << c.b << " " << c.d;
    Sector jw_sector{n, jw_cfg(), SpinFilter::none};
    jw_sector.mapping.n_alpha = h.n_alpha;
    jw_sector.mapping.n_beta = h.n_beta;
    EXPECT_NEAR(exact_ground_energy(jordan_wigner(f), jw_sector), sector, 1e-10);
  }
}

TEST(Reduction, H2ReducesToTwoQubits) {
  const auto f = molecular("H", "H", 0.7);
  const auto reduced = map_fermion(f, parity_cfg(true, 1, 1));
  EXPECT_EQ(reduced.n_qubits(), 2);
  EXPECT_TRUE(reduced.is_hermitian());
  EXPECT_NEAR(exact_ground_energy(reduced), -1.1361894507, 1e-9);
}

TEST(Mapping, HermitianInputsGiveRealSums) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_hermitian_fermion(rng, 4, 8);
    EXPECT_LT(jordan_wigner(f).max_imaginary(), 1e-12);
    EXPECT_LT(parity_map(f).max_imaginary(), 1e-12);
  }
}

}  // namespace
}  // namespace vqe
