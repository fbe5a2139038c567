// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr double kHermitianTolerance = 1e-12;

// i^k for k in Z.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxPauliQubits) {
    throw SizeError("Pauli register size must be in [1, 64], got " +
                    std::to_string(n));
  }
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
  check_qubit_count(n_qubits);
  return PauliString{0, 0, n_qubits};
}

PauliString PauliString::from_label(std::string_view label) {
  const int n = static_cast<int>(label.size());
  check_qubit_count(n);
  PauliString p{0, 0, n};
  for (int pos = 0; pos < n; ++pos) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - pos);
    switch (label[pos]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default:
        throw LabelError("invalid Pauli label character '" +
                         std::string(1, label[pos]) + "' in \"" +
                         std::string(label) + "\"");
    }
  }
  return p;
}

char PauliString::at(int qubit) const {
  const bool bx = (x >> qubit) & 1U;
  const bool bz = (z >> qubit) & 1U;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliString::label() const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) s[n_qubits - 1 - q] = at(q);
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const noexcept {
  const int overlap = std::popcount(x & other.z) + std::popcount(z & other.x);
  return overlap % 2 == 0;
}

Complex PauliString::phase_on(std::uint64_t basis) const noexcept {
  const int k = std::popcount(x & z) + 2 * std::popcount(z & basis);
  return i_power(k);
}

PauliTerm pauli_product(const PauliTerm& a, const PauliTerm& b) {
  if (a.word.n_qubits != b.word.n_qubits) {
    throw LabelError("Pauli product of labels with lengths " +
                     std::to_string(a.word.n_qubits) + " and " +
                     std::to_string(b.word.n_qubits));
  }
  const PauliString& p = a.word;
  const PauliString& q = b.word;
  PauliString r{p.x ^ q.x, p.z ^ q.z, p.n_qubits};
  // i^{a1} X^x1 Z^z1 i^{a2} X^x2 Z^z2 = i^{a1+a2} (-1)^{|z1&x2|} X^x3 Z^z3
  const int k = std::popcount(p.x & p.z) + std::popcount(q.x & q.z) -
                std::popcount(r.x & r.z) + 2 * std::popcount(p.z & q.x);
  return PauliTerm{a.coefficient * b.coefficient * i_power(k), r};
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  check_qubit_count(n_qubits);
  for (const auto& t : terms_) {
    if (t.word.n_qubits != n_qubits_) {
      throw LabelError("term \"" + t.label() + "\" does not match register of " +
                       std::to_string(n_qubits_) + " qubits");
    }
  }
  refresh_flag();
}

PauliSum PauliSum::identity(int n_qubits, double weight) {
  PauliSum s(n_qubits);
  s.add(PauliTerm{weight, PauliString::identity(n_qubits)});
  return s;
}

Complex PauliSum::identity_coefficient() const noexcept {
  Complex c{0.0, 0.0};
  for (const auto& t : terms_) {
    if (t.word.is_identity()) c += t.coefficient;
  }
  return c;
}

PauliSum PauliSum::without_identity() const {
  PauliSum out(n_qubits_);
  for (const auto& t : terms_) {
    if (!t.word.is_identity()) out.add(t);
  }
  return out;
}

void PauliSum::add(const PauliTerm& term) {
  if (term.word.n_qubits != n_qubits_) {
    throw LabelError("term \"" + term.label() + "\" does not match register of " +
                     std::to_string(n_qubits_) + " qubits");
  }
  terms_.push_back(term);
  hermitian_ = hermitian_ && std::abs(term.coefficient.imag()) <= kHermitianTolerance;
}

void PauliSum::add(Complex coefficient, std::string_view label) {
  add(PauliTerm{coefficient, label});
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  refresh_flag();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw LabelError("product of Pauli sums on " + std::to_string(a.n_qubits()) +
                     " and " + std::to_string(b.n_qubits()) + " qubits");
  }
  PauliSum out(a.n_qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) out.add(pauli_product(ta, tb));
  }
  return simplify(out, 0.0);
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& t : terms_) out.add(PauliTerm{std::conj(t.coefficient), t.word});
  return out;
}

double PauliSum::max_imaginary() const noexcept {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient.imag()));
  return m;
}

void PauliSum::refresh_flag() {
  hermitian_ = max_imaginary() <= kHermitianTolerance;
}

PauliSum simplify(const PauliSum& s, double tol) {
  if (tol < 0.0) throw ConfigError("simplify tolerance must be non-negative");
  std::unordered_map<PauliString, std::size_t, PauliStringHash> index;
  std::vector<PauliTerm> merged;
  merged.reserve(s.size());
  for (const auto& t : s.terms()) {
    auto [it, inserted] = index.try_emplace(t.word, merged.size());
    if (inserted) {
      merged.push_back(t);
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  std::vector<PauliTerm> kept;
  kept.reserve(merged.size());
  for (auto& t : merged) {
    if (std::abs(t.coefficient) > tol) {
      // Residual imaginary noise below tol is not physical.
      if (std::abs(t.coefficient.imag()) <= tol) t.coefficient.imag(0.0);
      if (std::abs(t.coefficient.real()) <= tol) t.coefficient.real(0.0);
      kept.push_back(t);
    }
  }
  return PauliSum(s.n_qubits(), std::move(kept));
}

Eigen::MatrixXcd to_dense_matrix(const PauliSum& s) {
  const int n = s.n_qubits();
  if (n > kMaxDenseQubits) {
    throw SizeError("dense matrix limited to " + std::to_string(kMaxDenseQubits) +
                    " qubits, got " + std::to_string(n));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& t : s.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(b ^ t.word.x), static_cast<Eigen::Index>(b)) +=
          t.coefficient * t.word.phase_on(b);
    }
  }
  return m;
}

void write_pauli_text(std::ostream& out, const PauliSum& s) {
  if (!s.is_hermitian()) {
    throw HermiticityError("Pauli text format holds real coefficients only");
  }
  std::ostringstream buf;
  buf << std::setprecision(17);
  for (const auto& t : s.terms()) buf << t.coefficient.real() << ' ' << t.label() << '\n';
  out << buf.str();
}

std::string to_pauli_text(const PauliSum& s) {
  std::ostringstream out;
  write_pauli_text(out, s);
  return out.str();
}

PauliSum read_pauli_text(std::istream& in) {
  std::vector<PauliTerm> terms;
  int n_qubits = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string coeff_text;
    std::string label;
    if (!(fields >> coeff_text)) continue;
    std::string extra;
    if (!(fields >> label) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<coefficient> <label>'");
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(coeff_text, &used);
      if (used != coeff_text.size()) throw std::invalid_argument(coeff_text);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '" +
                       coeff_text + "'");
    }
    const int n = static_cast<int>(label.size());
    if (n_qubits == 0) {
      n_qubits = n;
    } else if (n != n_qubits) {
      throw ParseError("line " + std::to_string(line_no) + ": label length " +
                       std::to_string(n) + " differs from " +
                       std::to_string(n_qubits));
    }
    try {
      terms.emplace_back(value, PauliString::from_label(label));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (n_qubits == 0) throw ParseError("no Pauli terms found");
  return PauliSum(n_qubits, std::move(terms));
}

PauliSum read_pauli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Hamiltonian file '" + path + "'");
  return read_pauli_text(in);
}

}  // namespace vqe
