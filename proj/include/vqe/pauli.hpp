// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace vqe {

using Complex = std::complex<double>;

inline constexpr double kDefaultSimplifyTolerance = 1e-12;
inline constexpr int kMaxDenseQubits = 14;
inline constexpr int kMaxPauliQubits = 64;

/**
 * @brief A Pauli word on up to 64 qubits in symplectic (x, z) form.
 *
 * Bit q of `x` / `z` describes qubit q. The operator represented is
 * i^{|x & z|} X^x Z^z, so (1,1) on a qubit is exactly Y.
 *
 * Text labels are little-endian: the rightmost character acts on qubit 0.
 */
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int n_qubits = 0;

  static PauliString identity(int n_qubits);
  static PauliString from_label(std::string_view label);

  std::string label() const;
  bool is_identity() const noexcept { return (x | z) == 0; }
  char at(int qubit) const;

  /// True if the two words commute.
  bool commutes_with(const PauliString& other) const noexcept;

  /// P|b> = phase(b) |b ^ x>.
  Complex phase_on(std::uint64_t basis) const noexcept;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ p.z);
  }
};

/// A weighted Pauli word.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  PauliString word;

  PauliTerm() = default;
  PauliTerm(Complex c, PauliString w) : coefficient(c), word(w) {}
  PauliTerm(Complex c, std::string_view label)
      : coefficient(c), word(PauliString::from_label(label)) {}

  std::string label() const { return word.label(); }
  int n_qubits() const noexcept { return word.n_qubits; }
};

/// Operator product a·b with the phase folded into the coefficient.
PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b);

/**
 * @brief A weighted sum of Pauli words on a fixed register.
 *
 * Terms are kept in insertion order. `simplify` merges equal labels and drops
 * negligible weights; the Hermitian flag is recomputed there and at
 * construction.
 */
class PauliSum {
 public:
  explicit PauliSum(int n_qubits = 1);
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(int n_qubits, double weight = 1.0);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// All coefficients real to within `tol` (default 1e-12).
  bool is_hermitian() const noexcept { return hermitian_; }

  /// Coefficient of the identity word (0 if absent). Assumes simplified form.
  Complex identity_coefficient() const noexcept;
  /// Copy of this sum with every identity term removed.
  PauliSum without_identity() const;

  void add(const PauliTerm& term);
  void add(Complex coefficient, std::string_view label);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  /// Operator product (distributes over terms, then simplifies).
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Hermitian adjoint.
  PauliSum adjoint() const;

  double max_imaginary() const noexcept;

 private:
  void refresh_flag();

  int n_qubits_;
  std::vector<PauliTerm> terms_;
  bool hermitian_ = true;
};

/// Merge like labels, drop |c| <= tol, recompute the Hermitian flag.
PauliSum simplify(const PauliSum& s, double tol = kDefaultSimplifyTolerance);

/// Dense 2^n x 2^n realization; n must not exceed 14.
Eigen::MatrixXcd to_dense_matrix(const PauliSum& s);

/// Write `<coefficient> <label>` lines. Imaginary parts must be zero.
void write_pauli_text(std::ostream& out, const PauliSum& s);
std::string to_pauli_text(const PauliSum& s);
/// Parse the text format; qubit count inferred from label length.
PauliSum read_pauli_text(std::istream& in);
PauliSum read_pauli_file(const std::string& path);

}  // namespace vqe
