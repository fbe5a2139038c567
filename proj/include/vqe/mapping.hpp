// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "vqe/fermion.hpp"
#include "vqe/pauli.hpp"

namespace vqe {

enum class MappingScheme { jordan_wigner, parity };

std::string to_string(MappingScheme s);
/// Accepts "jw", "jordan_wigner", "parity".
MappingScheme parse_mapping_scheme(const std::string& text);

/**
 * @brief Fermion-to-qubit encoding choice.
 *
 * Modes use block spin order: alpha spin orbitals 0..m-1, beta m..2m-1.
 * Particle counts are those of the active space.
 */
struct MappingConfig {
  MappingScheme scheme = MappingScheme::parity;
  bool two_qubit_reduction = false;
  int n_alpha = 0;
  int n_beta = 0;

  /// Throws ConfigError when reduction is requested without parity or odd n_modes.
  void validate(int n_modes) const;
  int n_qubits(int n_modes) const;
};

/// a+_j -> (X_j - iY_j)/2 Z_{<j}.
PauliSum jordan_wigner(const FermionOperator& f);

/// a+_j -> (X_j Z_{j-1} - iY_j)/2 X_{>j}; qubit j holds the parity of modes 0..j.
PauliSum parity_map(const FermionOperator& f);

/**
 * @brief Project out qubits n/2-1 and n-1 of a parity-basis operator.
 *
 * Those qubits hold the alpha-block parity and the total parity. A Z there is
 * replaced by its sector eigenvalue; an X or Y throws SectorViolationError.
 */
PauliSum two_qubit_reduction(const PauliSum& p, int n_alpha, int n_beta);

/**
 * @brief Qubit image of the Majorana operator c_k before any reduction.
 *
 * c_{2p} = a_p + a+_p and c_{2p+1} = i (a+_p - a_p).
 */
PauliString majorana_string(int k, int n_modes, MappingScheme scheme);

/// Full mapping per config (scheme, then optional reduction), simplified.
PauliSum map_fermion(const FermionOperator& f, const MappingConfig& cfg);

/// Qubit basis index of an occupation bit pattern under the config.
std::uint64_t encode_occupation(std::uint64_t occupation, int n_modes, const MappingConfig& cfg);

/// Inverse of encode_occupation (reduced qubits are restored from the sector).
std::uint64_t decode_occupation(std::uint64_t basis, int n_modes, const MappingConfig& cfg);

/// Lowest n_alpha alpha and lowest n_beta beta spin orbitals occupied.
std::uint64_t hartree_fock_occupation(int n_modes, int n_alpha, int n_beta);

/**
 * @brief Exchange the alpha and beta blocks of an occupation pattern.
 *
 * With basis states ordered a+_{p1} ... a+_{pk}|0>, p1 < ... < pk, the
 * fermionic exchange picks up the sign (-1)^(N_alpha N_beta), returned in
 * `sign`.
 */
std::uint64_t spin_flip_occupation(std::uint64_t occupation, int n_modes, int* sign = nullptr);

/// (N_alpha, N_beta) of an occupation bit pattern in block order.
std::pair<int, int> count_spins(std::uint64_t occupation, int n_modes);

}  // namespace vqe
