// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/mapping.hpp"

#include <bit>
#include <map>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr Complex kHalf{0.5, 0.0};
constexpr Complex kHalfI{0.0, 0.5};

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Image of a single ladder operator as two Pauli terms.
PauliSum jw_ladder(const LadderOp& op, int n) {
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t chain = low_mask(op.mode);
  const Complex y_coeff = op.dagger ? -kHalfI : kHalfI;
  PauliSum s(n);
  s.add(PauliTerm{kHalf, PauliString{bit, chain, n}});
  s.add(PauliTerm{y_coeff, PauliString{bit, chain | bit, n}});
  return s;
}

PauliSum parity_ladder(const LadderOp& op, int n) {
  const int j = op.mode;
  const std::uint64_t bit = std::uint64_t{1} << j;
  const std::uint64_t upper = low_mask(n) & ~low_mask(j + 1);
  const std::uint64_t below = j > 0 ? (std::uint64_t{1} << (j - 1)) : 0;
  const Complex y_coeff = op.dagger ? -kHalfI : kHalfI;
  PauliSum s(n);
  s.add(PauliTerm{kHalf, PauliString{bit | upper, below, n}});
  s.add(PauliTerm{y_coeff, PauliString{bit | upper, bit, n}});
  return s;
}

template <typename LadderImage>
PauliSum map_with(const FermionOperator& f, LadderImage image) {
  const int n = f.n_modes();
  std::map<LadderOp, PauliSum> cache;
  auto lookup = [&](const LadderOp& op) -> const PauliSum& {
    auto it = cache.find(op);
    if (it == cache.end()) it = cache.emplace(op, image(op, n)).first;
    return it->second;
  };
  PauliSum out(n);
  for (const auto& term : f.terms()) {
    PauliSum product = PauliSum::identity(n, term.coefficient);
    for (const auto& op : term.ops) product = product * lookup(op);
    out += product;
  }
  return simplify(out);
}

// Removes bits a < b from v, shifting higher bits down.
std::uint64_t drop_bits(std::uint64_t v, int a, int b) {
  auto drop = [](std::uint64_t w, int k) {
    return (w & low_mask(k)) | ((w >> (k + 1)) << k);
  };
  return drop(drop(v, b), a);
}

std::uint64_t insert_bit(std::uint64_t w, int k, bool value) {
  return (w & low_mask(k)) | (std::uint64_t{value} << k) | ((w >> k) << (k + 1));
}

}  // namespace

std::string to_string(MappingScheme s) {
  return s == MappingScheme::parity ? "parity" : "jw";
}

MappingScheme parse_mapping_scheme(const std::string& text) {
  if (text == "jw" || text == "jordan_wigner") return MappingScheme::jordan_wigner;
  if (text == "parity") return MappingScheme::parity;
  throw ConfigError("unknown mapping '" + text + "' (expected jw or parity)");
}

void MappingConfig::validate(int n_modes) const {
  if (n_modes < 1) throw ConfigError("mapping needs at least one mode");
  if (n_alpha < 0 || n_beta < 0) throw ConfigError("negative particle count");
  if (two_qubit_reduction) {
    if (scheme != MappingScheme::parity) {
      throw ConfigError("two-qubit reduction requires the parity mapping");
    }
    if (n_modes % 2 != 0 || n_modes < 4) {
      throw ConfigError("two-qubit reduction requires an even mode count >= 4");
    }
  }
}

int MappingConfig::n_qubits(int n_modes) const {
  return two_qubit_reduction ? n_modes - 2 : n_modes;
}

PauliString majorana_string(int k, int n_modes, MappingScheme scheme) {
  if (k < 0 || k >= 2 * n_modes) throw IndexError("Majorana index out of range");
  const LadderOp op{k / 2, false};
  const PauliSum ladder = scheme == MappingScheme::jordan_wigner ? jw_ladder(op, n_modes)
                                                                 : parity_ladder(op, n_modes);
  // Both forms have X-type first term and Y-type second term: c_{2p} is the
  // first word, c_{2p+1} the second.
  return ladder.terms()[static_cast<std::size_t>(k % 2)].word;
}

PauliSum jordan_wigner(const FermionOperator& f) { return map_with(f, jw_ladder); }

PauliSum parity_map(const FermionOperator& f) { return map_with(f, parity_ladder); }

PauliSum two_qubit_reduction(const PauliSum& p, int n_alpha, int n_beta) {
  const int n = p.n_qubits();
  if (n % 2 != 0 || n < 4) {
    throw ConfigError("two-qubit reduction requires an even register of >= 4 qubits");
  }
  const int qa = n / 2 - 1;
  const int qt = n - 1;
  const std::uint64_t removed = (std::uint64_t{1} << qa) | (std::uint64_t{1} << qt);
  const double sign_a = (n_alpha % 2) ? -1.0 : 1.0;
  const double sign_t = ((n_alpha + n_beta) % 2) ? -1.0 : 1.0;
  PauliSum out(n - 2);
  for (const auto& t : p.terms()) {
    if (t.word.x & removed) {
      throw SectorViolationError("term " + t.label() +
                                 " flips a conserved parity qubit");
    }
    Complex c = t.coefficient;
    if (t.word.z >> qa & 1U) c *= sign_a;
    if (t.word.z >> qt & 1U) c *= sign_t;
    out.add(PauliTerm{c, PauliString{drop_bits(t.word.x, qa, qt),
                                      drop_bits(t.word.z, qa, qt), n - 2}});
  }
  return simplify(out);
}

PauliSum map_fermion(const FermionOperator& f, const MappingConfig& cfg) {
  cfg.validate(f.n_modes());
  if (cfg.scheme == MappingScheme::jordan_wigner) return jordan_wigner(f);
  PauliSum p = parity_map(f);
  if (!cfg.two_qubit_reduction) return p;
  return two_qubit_reduction(p, cfg.n_alpha, cfg.n_beta);
}

std::uint64_t encode_occupation(std::uint64_t occupation, int n_modes, const MappingConfig& cfg) {
  cfg.validate(n_modes);
  if (cfg.scheme == MappingScheme::jordan_wigner) return occupation;
  std::uint64_t bits = 0;
  bool parity = false;
  for (int j = 0; j < n_modes; ++j) {
    parity ^= (occupation >> j) & 1U;
    if (parity) bits |= std::uint64_t{1} << j;
  }
  if (!cfg.two_qubit_reduction) return bits;
  return drop_bits(bits, n_modes / 2 - 1, n_modes - 1);
}

std::uint64_t decode_occupation(std::uint64_t basis, int n_modes, const MappingConfig& cfg) {
  cfg.validate(n_modes);
  if (cfg.scheme == MappingScheme::jordan_wigner) return basis;
  std::uint64_t bits = basis;
  if (cfg.two_qubit_reduction) {
    bits = insert_bit(bits, n_modes / 2 - 1, cfg.n_alpha % 2);
    bits = insert_bit(bits, n_modes - 1, (cfg.n_alpha + cfg.n_beta) % 2);
  }
  return bits ^ (bits << 1 & low_mask(n_modes));
}

std::uint64_t hartree_fock_occupation(int n_modes, int n_alpha, int n_beta) {
  const int m = n_modes / 2;
  if (n_modes % 2 != 0) throw OccupationError("spin-orbital count must be even");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > m || n_beta > m) {
    throw OccupationError("particle counts (" + std::to_string(n_alpha) + ", " +
                          std::to_string(n_beta) + ") do not fit " + std::to_string(m) +
                          " spatial orbitals");
  }
  return low_mask(n_alpha) | (low_mask(n_beta) << m);
}

std::uint64_t spin_flip_occupation(std::uint64_t occupation, int n_modes, int* sign) {
  if (n_modes % 2 != 0) throw OccupationError("spin-orbital count must be even");
  const int m = n_modes / 2;
  const std::uint64_t alpha = occupation & low_mask(m);
  const std::uint64_t beta = (occupation >> m) & low_mask(m);
  if (sign) *sign = (std::popcount(alpha) * std::popcount(beta)) % 2 ? -1 : 1;
  return beta | (alpha << m);
}

std::pair<int, int> count_spins(std::uint64_t occupation, int n_modes) {
  const int m = n_modes / 2;
  return {std::popcount(occupation & low_mask(m)),
          std::popcount((occupation >> m) & low_mask(m))};
}

}  // namespace vqe
