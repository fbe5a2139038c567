// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vqe/mapping.hpp"
#include "vqe/statevector.hpp"

namespace vqe {

enum class AnsatzKind { uccsd, hardware_efficient, single_qubit_u3 };

std::string to_string(AnsatzKind k);
/// Accepts "uccsd", "hwe", "hardware_efficient", "u3".
AnsatzKind parse_ansatz_kind(const std::string& text);

/// A spin-conserving excitation; `from` are occupied, `to` virtual spin orbitals.
struct Excitation {
  std::vector<int> from;
  std::vector<int> to;

  std::string name() const;
  /// a+_to... a_from... minus its adjoint.
  FermionOperator generator(int n_modes) const;
};

/// Singles (alpha, then beta), then doubles (alpha-alpha, beta-beta, alpha-beta).
std::vector<Excitation> uccsd_excitations(int n_modes, int n_alpha, int n_beta);

/// The same excitation with alpha and beta exchanged.
Excitation spin_flip(const Excitation& e, int n_modes);

/**
 * @brief Excitations grouped by a shared parameter.
 *
 * Without spin pairing every excitation is its own group. With pairing
 * (closed-shell references only) each excitation shares a group with its
 * spin-flip image, first occurrence order.
 */
std::vector<std::vector<Excitation>> uccsd_parameter_groups(int n_modes, int n_alpha, int n_beta,
                                                            bool spin_paired);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::uccsd;
  int n_spin_orbitals = 0;  // uccsd only
  MappingConfig mapping;    // uccsd and HF initial state
  int n_qubits = 1;         // hardware_efficient only
  int depth = 1;            // hardware_efficient only
  bool hf_initial_state = false;  // hardware_efficient: start from the HF basis state
  bool spin_paired = false;       // uccsd: tie each excitation to its spin-flip image

  int parameter_count() const;
};

Circuit hartree_fock_circuit(int n_spin_orbitals, const MappingConfig& mapping);

/**
 * @brief Single-step Trotterized UCCSD over the HF reference.
 *
 * Each excitation's generator is expanded in Majorana monomials (8 for a
 * double, 2 for a single); every monomial maps to one Pauli word and becomes
 * one rotation sharing the excitation's parameter. With `spin_paired`, an
 * excitation and its spin-flip image share one parameter and each monomial is
 * applied together with its spin-flip image, so the circuit commutes with the
 * alpha/beta exchange. Throws AnsatzError when no excitation exists.
 */
Circuit uccsd_circuit(int n_spin_orbitals, const MappingConfig& mapping, bool spin_paired = false);

/// depth+1 U3 layers with CNOT chains q -> q+1 in between.
Circuit hardware_efficient_circuit(int n_qubits, int depth, std::uint64_t initial_state = 0);

Circuit build_ansatz(const AnsatzSpec& spec);

}  // namespace vqe
