// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vqe/error.hpp"

namespace vqe {

namespace {

using Monomial = std::vector<int>;

// a_p = (c_{2p} + i c_{2p+1})/2, a+_p = (c_{2p} - i c_{2p+1})/2; products are
// brought to ascending index order with c_k^2 = 1.
std::map<Monomial, Complex> majorana_expansion(const FermionOperator& f) {
  std::map<Monomial, Complex> out;
  for (const auto& term : f.terms()) {
    std::vector<std::pair<Monomial, Complex>> partial{{{}, Complex{term.coefficient, 0.0}}};
    for (const auto& op : term.ops) {
      std::vector<std::pair<Monomial, Complex>> next;
      for (const auto& [mono, c] : partial) {
        auto even = mono;
        even.push_back(2 * op.mode);
        next.emplace_back(std::move(even), 0.5 * c);
        auto odd = mono;
        odd.push_back(2 * op.mode + 1);
        next.emplace_back(std::move(odd), c * Complex{0.0, op.dagger ? -0.5 : 0.5});
      }
      partial = std::move(next);
    }
    for (auto& [mono, c] : partial) {
      // Bubble sort with anticommutation signs, then cancel squares.
      for (std::size_t i = 0; i < mono.size(); ++i)
        for (std::size_t j = 0; j + 1 < mono.size() - i; ++j)
          if (mono[j] > mono[j + 1]) {
            std::swap(mono[j], mono[j + 1]);
            c = -c;
          }
      Monomial reduced;
      for (int k : mono) {
        if (!reduced.empty() && reduced.back() == k) {
          reduced.pop_back();
        } else {
          reduced.push_back(k);
        }
      }
      out[reduced] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = std::abs(it->second) < 1e-14 ? out.erase(it) : std::next(it);
  }
  return out;
}

// Qubit image of coeff * c_{i0} c_{i1} ... under the mapping.
PauliTerm majorana_term(Complex coeff, const Monomial& indices, int n_modes,
                        const MappingConfig& mapping) {
  PauliTerm t{coeff, PauliString::identity(n_modes)};
  for (int k : indices) {
    t = pauli_product(t, PauliTerm{1.0, majorana_string(k, n_modes, mapping.scheme)});
  }
  if (!mapping.two_qubit_reduction) return t;
  const PauliSum reduced =
      two_qubit_reduction(PauliSum(n_modes, {t}), mapping.n_alpha, mapping.n_beta);
  if (reduced.size() != 1) throw AnsatzError("monomial vanished under reduction");
  return reduced.terms().front();
}

}  // namespace

std::string to_string(AnsatzKind k) {
  switch (k) {
    case AnsatzKind::uccsd: return "uccsd";
    case AnsatzKind::hardware_efficient: return "hwe";
    default: return "u3";
  }
}

AnsatzKind parse_ansatz_kind(const std::string& text) {
  if (text == "uccsd") return AnsatzKind::uccsd;
  if (text == "hwe" || text == "hardware_efficient") return AnsatzKind::hardware_efficient;
  if (text == "u3" || text == "single_qubit_u3") return AnsatzKind::single_qubit_u3;
  throw ConfigError("unknown ansatz '" + text + "' (expected uccsd, hwe or u3)");
}

std::string Excitation::name() const {
  std::string s = from.size() == 1 ? "s" : "d";
  for (int i : from) s += "_" + std::to_string(i);
  for (int a : to) s += "_" + std::to_string(a);
  return s;
}

FermionOperator Excitation::generator(int n_modes) const {
  std::vector<LadderOp> ops;
  for (int a : to) ops.push_back(create(a));
  for (auto it = from.rbegin(); it != from.rend(); ++it) ops.push_back(annihilate(*it));
  FermionOperator t(n_modes);
  t.add(1.0, ops);
  FermionOperator g = t;
  const FermionOperator t_dag = t.adjoint();
  for (const auto& term : t_dag.terms()) g.add(-term.coefficient, term.ops);
  return g;
}

std::vector<Excitation> uccsd_excitations(int n_modes, int n_alpha, int n_beta) {
  const int m = n_modes / 2;
  hartree_fock_occupation(n_modes, n_alpha, n_beta);  // validates counts
  auto occ = [&](int spin) {
    std::vector<int> v;
    for (int k = 0; k < (spin == 0 ? n_alpha : n_beta); ++k) v.push_back(spin * m + k);
    return v;
  };
  auto virt = [&](int spin) {
    std::vector<int> v;
    for (int k = (spin == 0 ? n_alpha : n_beta); k < m; ++k) v.push_back(spin * m + k);
    return v;
  };
  std::vector<Excitation> out;
  for (int spin = 0; spin < 2; ++spin)
    for (int i : occ(spin))
      for (int a : virt(spin)) out.push_back({{i}, {a}});
  for (int spin = 0; spin < 2; ++spin) {
    const auto o = occ(spin);
    const auto v = virt(spin);
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        for (std::size_t a = 0; a < v.size(); ++a)
          for (std::size_t b = a + 1; b < v.size(); ++b) out.push_back({{o[i], o[j]}, {v[a], v[b]}});
  }
  for (int i : occ(0))
    for (int j : occ(1))
      for (int a : virt(0))
        for (int b : virt(1)) out.push_back({{i, j}, {a, b}});
  return out;
}

Excitation spin_flip(const Excitation& e, int n_modes) {
  const int m = n_modes / 2;
  auto flip = [m](int p) { return p < m ? p + m : p - m; };
  Excitation out;
  for (int p : e.from) out.from.push_back(flip(p));
  for (int p : e.to) out.to.push_back(flip(p));
  // Keep alpha orbitals first so the image matches the enumeration's form.
  auto order = [m](std::vector<int>& v) {
    std::sort(v.begin(), v.end(), [m](int a, int b) {
      return (a >= m) != (b >= m) ? a < m : a < b;
    });
  };
  if (out.from.size() == 2) {
    const bool mixed = (out.from[0] < m) != (out.from[1] < m);
    if (mixed) {
      // a+_a a+_b a_j a_i keeps its sign when both pairs are swapped together.
      std::swap(out.from[0], out.from[1]);
      std::swap(out.to[0], out.to[1]);
    } else {
      order(out.from);
      order(out.to);
    }
  }
  return out;
}

std::vector<std::vector<Excitation>> uccsd_parameter_groups(int n_modes, int n_alpha, int n_beta,
                                                            bool spin_paired) {
  const auto all = uccsd_excitations(n_modes, n_alpha, n_beta);
  std::vector<std::vector<Excitation>> groups;
  if (!spin_paired) {
    for (const auto& e : all) groups.push_back({e});
    return groups;
  }
  if (n_alpha != n_beta) throw AnsatzError("spin pairing needs a closed-shell reference");
  std::vector<bool> used(all.size(), false);
  auto same = [](const Excitation& a, const Excitation& b) {
    return a.from == b.from && a.to == b.to;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<Excitation> group{all[i]};
    const Excitation image = spin_flip(all[i], n_modes);
    if (!same(image, all[i])) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (!used[j] && same(all[j], image)) {
          used[j] = true;
          group.push_back(all[j]);
          break;
        }
      }
      if (group.size() != 2) throw AnsatzError("no spin-flip image for " + all[i].name());
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

int AnsatzSpec::parameter_count() const {
  switch (kind) {
    case AnsatzKind::uccsd:
      return static_cast<int>(
          uccsd_parameter_groups(n_spin_orbitals, mapping.n_alpha, mapping.n_beta, spin_paired)
              .size());
    case AnsatzKind::hardware_efficient: return 3 * n_qubits * (depth + 1);
    default: return 3;
  }
}

Circuit hartree_fock_circuit(int n_spin_orbitals, const MappingConfig& mapping) {
  mapping.validate(n_spin_orbitals);
  const auto occ = hartree_fock_occupation(n_spin_orbitals, mapping.n_alpha, mapping.n_beta);
  return Circuit(mapping.n_qubits(n_spin_orbitals),
                 encode_occupation(occ, n_spin_orbitals, mapping));
}

Circuit uccsd_circuit(int n_spin_orbitals, const MappingConfig& mapping, bool spin_paired) {
  Circuit c = hartree_fock_circuit(n_spin_orbitals, mapping);
  const auto groups =
      uccsd_parameter_groups(n_spin_orbitals, mapping.n_alpha, mapping.n_beta, spin_paired);
  if (groups.empty()) throw AnsatzError("active space admits no excitations");
  const int m = n_spin_orbitals / 2;
  auto flip = [m](int k) {
    const int p = k / 2;
    return 2 * (p < m ? p + m : p - m) + k % 2;
  };
  for (const auto& group : groups) {
    const Excitation& ex = group.front();
    const int slot = c.add_parameter(ex.name());
    // Each monomial of the generator, paired with its spin-flip image when
    // the group is a spin pair, forms one block of commuting rotations.
    for (const auto& [indices, coeff] : majorana_expansion(ex.generator(n_spin_orbitals))) {
      std::vector<PauliTerm> block{majorana_term(coeff, indices, n_spin_orbitals, mapping)};
      if (group.size() == 2) {
        std::vector<int> image(indices.size());
        std::transform(indices.begin(), indices.end(), image.begin(), flip);
        block.push_back(majorana_term(coeff, image, n_spin_orbitals, mapping));
        if (!block[0].word.commutes_with(block[1].word)) {
          throw AnsatzError("spin-flip images in " + ex.name() + " do not commute");
        }
      }
      for (const auto& t : block) {
        if (std::abs(t.coefficient.real()) > 1e-12) {
          throw AnsatzError("generator of " + ex.name() + " is not anti-Hermitian");
        }
        // exp(theta * i g P) = exp(-i (-2 g theta)/2 P)
        c.pauli_rotation(t.word, Angle::parameter(slot, -2.0 * t.coefficient.imag()));
      }
    }
  }
  return c;
}

Circuit hardware_efficient_circuit(int n_qubits, int depth, std::uint64_t initial_state) {
  if (depth < 0) throw AnsatzError("depth must be non-negative");
  Circuit c(n_qubits, initial_state);
  for (int layer = 0; layer <= depth; ++layer) {
    for (int q = 0; q < n_qubits; ++q) {
      const std::string tag = "_" + std::to_string(layer) + "_" + std::to_string(q);
      const int th = c.add_parameter("theta" + tag);
      const int ph = c.add_parameter("phi" + tag);
      const int la = c.add_parameter("lambda" + tag);
      c.u3(q, Angle::parameter(th), Angle::parameter(ph), Angle::parameter(la));
    }
    if (layer < depth) {
      for (int q = 0; q + 1 < n_qubits; ++q) c.cnot(q, q + 1);
    }
  }
  return c;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  switch (spec.kind) {
    case AnsatzKind::uccsd:
      return uccsd_circuit(spec.n_spin_orbitals, spec.mapping, spec.spin_paired);
    case AnsatzKind::hardware_efficient: {
      std::uint64_t init = 0;
      if (spec.hf_initial_state) {
        init = hartree_fock_circuit(spec.n_spin_orbitals, spec.mapping).initial_state();
      }
      return hardware_efficient_circuit(spec.n_qubits, spec.depth, init);
    }
    default: return hardware_efficient_circuit(1, 0);
  }
}

}  // namespace vqe
