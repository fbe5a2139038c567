// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vqe/error.hpp"
#include "vqe/pauli.hpp"

namespace vqe {
namespace {

TEST(PauliString, LabelsAreLittleEndian) {
  const auto p = PauliString::from_label("XIZY");
  EXPECT_EQ(p.at(0), 'Y');
  EXPECT_EQ(p.at(1), 'Z');
  EXPECT_EQ(p.at(2), 'I');
  EXPECT_EQ(p.at(3), 'X');
  EXPECT_EQ(p.label(), "XIZY");
  EXPECT_EQ(p.n_qubits, 4);
}

TEST(PauliString, RejectsBadLabels) {
  EXPECT_THROW(PauliString::from_label("XQ"), LabelError);
  EXPECT_THROW(PauliString::from_label(""), SizeError);
  EXPECT_THROW(PauliString::from_label(std::string(65, 'X')), SizeError);
}

TEST(PauliProduct, SingleQubitTable) {
  const Complex i{0.0, 1.0};
  auto prod = [](const char* a, const char* b) {
    return pauli_product(PauliTerm{1.0, a}, PauliTerm{1.0, b});
  };
  EXPECT_EQ(prod("X", "Y").label(), "Z");
  EXPECT_NEAR(std::abs(prod("X", "Y").coefficient - i), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod("Y", "X").coefficient + i), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod("Y", "Z").coefficient - i), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod("Z", "X").coefficient - i), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(prod("Y", "Y").coefficient - 1.0), 0.0, 1e-15);
  EXPECT_EQ(prod("Y", "Y").label(), "I");
}

TEST(PauliProduct, DisjointSupports) {
  const auto p = pauli_product(PauliTerm{1.0, "XI"}, PauliTerm{1.0, "IX"});
  EXPECT_EQ(p.label(), "XX");
  EXPECT_EQ(p.coefficient, Complex(1.0, 0.0));
  const auto zz = pauli_product(PauliTerm{1.0, "Z"}, PauliTerm{1.0, "Z"});
  EXPECT_EQ(zz.label(), "I");
  EXPECT_EQ(zz.coefficient, Complex(1.0, 0.0));
}

TEST(PauliProduct, ReversedOrderDiffersBySign) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliTerm a{oracle::uniform(rng, -2, 2), oracle::random_label(rng, 6)};
    const PauliTerm b{oracle::uniform(rng, -2, 2), oracle::random_label(rng, 6)};
    const auto ab = pauli_product(a, b);
    const auto ba = pauli_product(b, a);
    EXPECT_EQ(ab.label(), ba.label());
    const double sign = a.word.commutes_with(b.word) ? 1.0 : -1.0;
    EXPECT_LT(std::abs(ab.coefficient - sign * ba.coefficient), 1e-14);
  }
}

TEST(Simplify, Examples) {
  PauliSum merge(1);
  merge.add(0.5, "Z");
  merge.add(0.5, "Z");
  const auto m = simplify(merge);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.terms()[0].label(), "Z");
  EXPECT_DOUBLE_EQ(m.terms()[0].coefficient.real(), 1.0);

  PauliSum tiny(1);
  tiny.add(1e-15, "X");
  const auto t = simplify(tiny, 1e-12);
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.n_qubits(), 1);

  PauliSum cancel(2);
  cancel.add(1.0, "XY");
  cancel.add(-1.0, "XY");
  cancel.add(2.0, "II");
  const auto c = simplify(cancel);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms()[0].label(), "II");
  EXPECT_DOUBLE_EQ(c.terms()[0].coefficient.real(), 2.0);
}

TEST(Simplify, NegativeToleranceThrows) {
  EXPECT_THROW(simplify(PauliSum(1), -1.0), ConfigError);
}

TEST(Simplify, LabelsUniqueAndDensePreserved) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto s = oracle::random_hermitian_sum(rng, n, 30);
    const auto t = simplify(s);
    std::set<std::string> seen;
    for (const auto& term : t.terms()) EXPECT_TRUE(seen.insert(term.label()).second);
    EXPECT_LT((to_dense_matrix(t) - to_dense_matrix(s)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DenseMatrix, SingleQubitExamples) {
  const auto z = to_dense_matrix(PauliSum(1, {PauliTerm{1.0, "Z"}}));
  EXPECT_EQ(z(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(z(1, 1), Complex(-1.0, 0.0));
  EXPECT_EQ(z(0, 1), Complex(0.0, 0.0));
  const auto x = to_dense_matrix(PauliSum(1, {PauliTerm{1.0, "X"}}));
  EXPECT_EQ(x(0, 1), Complex(1.0, 0.0));
  EXPECT_EQ(x(1, 0), Complex(1.0, 0.0));
  EXPECT_EQ(x(0, 0), Complex(0.0, 0.0));
}

TEST(DenseMatrix, HermitianSumsGiveHermitianMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::random_hermitian_sum(rng, 4, 10);
    ASSERT_TRUE(s.is_hermitian());
    const auto m = to_dense_matrix(s);
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DenseMatrix, RandomThreeQubitSumMatchesKronecker) {
  std::mt19937_64 rng(3);
  const auto s = oracle::random_hermitian_sum(rng, 3, 8);
  EXPECT_LT((to_dense_matrix(s) - oracle::kron_sum(s)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PauliProduct, LengthMismatchThrows) {
  EXPECT_THROW(pauli_product(PauliTerm{1.0, "XX"}, PauliTerm{1.0, "X"}), LabelError);
}

TEST(PauliProduct, MatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_label(rng, 3);
    const auto b = oracle::random_label(rng, 3);
    const auto p = pauli_product(PauliTerm{1.0, a}, PauliTerm{1.0, b});
    const Eigen::MatrixXcd expected = oracle::kron_label(a) * oracle::kron_label(b);
    const Eigen::MatrixXcd got = p.coefficient * oracle::kron_label(p.label());
    EXPECT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-14) << a << " * " << b;
  }
}

TEST(PauliString, CommutationAgreesWithMatrices) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_label(rng, 3);
    const auto b = oracle::random_label(rng, 3);
    const Eigen::MatrixXcd ma = oracle::kron_label(a);
    const Eigen::MatrixXcd mb = oracle::kron_label(b);
    const bool commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(PauliString::from_label(a).commutes_with(PauliString::from_label(b)), commute);
  }
}

TEST(PauliSum, SimplifyMergesAndDrops) {
  PauliSum s(2);
  s.add(0.5, "XZ");
  s.add(0.25, "XZ");
  s.add(1e-14, "YY");
  s.add(-1.0, "II");
  const auto t = simplify(s);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_DOUBLE_EQ(t.terms()[0].coefficient.real(), 0.75);
  EXPECT_DOUBLE_EQ(t.identity_coefficient().real(), -1.0);
}

TEST(PauliSum, HermitianFlagTracksImaginaryParts) {
  PauliSum s(1);
  s.add(1.0, "X");
  EXPECT_TRUE(s.is_hermitian());
  s.add(Complex{0.0, 1e-3}, "Z");
  EXPECT_FALSE(s.is_hermitian());
  const auto cancelled = simplify(s + PauliSum(1, {PauliTerm{Complex{0.0, -1e-3}, "Z"}}));
  EXPECT_TRUE(cancelled.is_hermitian());
}

TEST(PauliSum, MismatchedRegisterThrows) {
  PauliSum s(2);
  EXPECT_THROW(s.add(1.0, "XXX"), LabelError);
  EXPECT_THROW(PauliSum(2) * PauliSum(3), LabelError);
}

TEST(PauliSum, ProductMatchesDense) {
  std::mt19937_64 rng(13);
  const auto a = oracle::random_hermitian_sum(rng, 3, 6);
  const auto b = oracle::random_hermitian_sum(rng, 3, 6);
  const Eigen::MatrixXcd expected = oracle::kron_sum(a) * oracle::kron_sum(b);
  EXPECT_LT((to_dense_matrix(a * b) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PauliSum, AdjointConjugatesCoefficients) {
  PauliSum s(2);
  s.add(Complex{1.0, 2.0}, "XY");
  const auto d = to_dense_matrix(s.adjoint());
  EXPECT_LT((d - to_dense_matrix(s).adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

// 200 random 4-qubit sums against an independent Kronecker construction.
TEST(DenseMatrix, RandomFourQubitSumsMatchKronecker) {
  std::mt19937_64 rng(2026);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_hermitian_sum(rng, 4, 1 + static_cast<int>(rng() % 12));
    worst = std::max(worst, (to_dense_matrix(s) - oracle::kron_sum(s)).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(DenseMatrix, RefusesLargeRegisters) {
  EXPECT_THROW(to_dense_matrix(PauliSum::identity(15)), SizeError);
}

TEST(PauliText, RoundTripIsExact) {
  std::mt19937_64 rng(14);
  const auto s = oracle::random_hermitian_sum(rng, 5, 20);
  std::istringstream in(to_pauli_text(s));
  const auto back = read_pauli_text(in);
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_EQ(back.terms()[k].coefficient, s.terms()[k].coefficient);
    EXPECT_EQ(back.terms()[k].label(), s.terms()[k].label());
  }
}

TEST(PauliText, CommentsAndBlankLinesAreSkipped) {
  std::istringstream in("# H2\n\n-0.5 IZ  # trailing\n0.25 XX\n");
  const auto s = read_pauli_text(in);
  EXPECT_EQ(s.n_qubits(), 2);
  EXPECT_EQ(s.size(), 2u);
}

TEST(PauliText, MalformedInputThrows) {
  std::istringstream bad_coeff("abc XX\n");
  EXPECT_THROW(read_pauli_text(bad_coeff), ParseError);
  std::istringstream bad_label("1.0 XQ\n");
  EXPECT_THROW(read_pauli_text(bad_label), ParseError);
  std::istringstream ragged("1.0 XX\n1.0 XXX\n");
  EXPECT_THROW(read_pauli_text(ragged), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_pauli_text(empty), ParseError);
}

TEST(PauliText, ComplexCoefficientsAreRejectedOnWrite) {
  PauliSum s(1);
  s.add(Complex{0.0, 1.0}, "X");
  EXPECT_THROW(to_pauli_text(s), HermiticityError);
}

}  // namespace
}  // namespace vqe
