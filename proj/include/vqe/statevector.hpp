// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vqe/pauli.hpp"

namespace vqe {

inline constexpr int kMaxStateQubits = 24;

/// Exact pure state over 2^n amplitudes; bit q of the index is qubit q.
class StateVector {
 public:
  /// |0...0> on n qubits, 1 <= n <= 24.
  static StateVector zero(int n_qubits);
  /// Computational basis state |basis>.
  static StateVector basis_state(int n_qubits, std::uint64_t basis);
  /// Takes ownership of amplitudes; length must be a power of two.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const noexcept;

  StateVector& apply_u3(int qubit, double theta, double phi, double lambda);
  StateVector& apply_cnot(int control, int target);
  /// exp(-i angle/2 P).
  StateVector& apply_pauli_rotation(const PauliString& p, double angle);
  StateVector& apply_pauli_rotation(std::string_view label, double angle);

 private:
  StateVector(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}
  void check_qubit(int q) const;

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// 2x2 U3 matrix, row-major.
std::array<Complex, 4> u3_matrix(double theta, double phi, double lambda);

/**
 * @brief Exact <psi|H|psi> for a Hermitian-flagged sum.
 *
 * Identity terms contribute their coefficient directly. Throws
 * HermiticityError for non-Hermitian sums and SizeError on register mismatch.
 */
double expectation(const StateVector& state, const PauliSum& h);

/// value = constant + scale * params[slot] (slot < 0 means constant).
struct Angle {
  double constant = 0.0;
  int slot = -1;
  double scale = 1.0;

  static Angle fixed(double v) { return Angle{v, -1, 1.0}; }
  static Angle parameter(int slot, double scale = 1.0) { return Angle{0.0, slot, scale}; }
  double bind(std::span<const double> params) const;
};

struct U3Gate {
  int qubit;
  Angle theta, phi, lambda;
};

struct CnotGate {
  int control;
  int target;
};

struct PauliRotationGate {
  PauliString pauli;
  Angle angle;
};

using Gate = std::variant<U3Gate, CnotGate, PauliRotationGate>;

/**
 * @brief An ordered gate list applied to a computational basis state.
 *
 * Free parameters are numbered slots; each slot may carry a name so that
 * map-based bindings can be resolved.
 */
class Circuit {
 public:
  explicit Circuit(int n_qubits, std::uint64_t initial_state = 0);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t initial_state() const noexcept { return initial_state_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  int n_parameters() const noexcept { return static_cast<int>(parameter_names_.size()); }
  const std::vector<std::string>& parameter_names() const noexcept { return parameter_names_; }

  /// Adds a named parameter slot and returns its index.
  int add_parameter(std::string name);

  Circuit& u3(int qubit, Angle theta, Angle phi, Angle lambda);
  Circuit& cnot(int control, int target);
  Circuit& pauli_rotation(const PauliString& p, Angle angle);

  /// Resolve a name->value map into slot order; every slot must be present.
  std::vector<double> bind(const std::map<std::string, double>& bindings) const;

 private:
  void check_angle(const Angle& a) const;

  int n_qubits_;
  std::uint64_t initial_state_;
  std::vector<Gate> gates_;
  std::vector<std::string> parameter_names_;
};

/// Apply the circuit to its initial basis state with the given slot values.
StateVector run_circuit(const Circuit& c, std::span<const double> params);
StateVector run_circuit(const Circuit& c, const std::map<std::string, double>& bindings);

}  // namespace vqe
