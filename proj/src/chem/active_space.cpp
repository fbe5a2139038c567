// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/active_space.hpp"

#include <algorithm>
#include <cmath>

#include "vqe/error.hpp"

namespace vqe::chem {

double ActiveSpaceHamiltonian::h(int p, int q) const {
  if (p / n_spatial != q / n_spatial) return 0.0;
  return one_body(p % n_spatial, q % n_spatial);
}

double ActiveSpaceHamiltonian::g(int p, int q, int r, int s) const {
  const int m = n_spatial;
  if (p / m != r / m || q / m != s / m) return 0.0;
  return two_body(p % m, r % m, q % m, s % m);
}

int frozen_core_count(const Molecule& m) {
  int count = 0;
  for (const auto& a : m.atoms) {
    if (a.atomic_number > 18) throw ElementError("freeze-core table covers H..Ar only");
    if (a.atomic_number > 10) {
      count += 5;
    } else if (a.atomic_number > 2) {
      count += 1;
    }
  }
  return count;
}

ActiveSpaceHamiltonian build_active_hamiltonian(const SCFResult& scf, const IntegralSet& ints,
                                                int n_frozen, const std::vector<int>& removed) {
  const int n_mo = static_cast<int>(scf.coefficients.cols());
  const int n_occ = scf.n_occupied;
  if (n_frozen < 0 || n_frozen >= n_occ) {
    throw ActiveSpaceError("cannot freeze " + std::to_string(n_frozen) + " of " +
                           std::to_string(n_occ) + " occupied orbitals and keep active electrons");
  }
  std::vector<int> removed_sorted = removed;
  std::sort(removed_sorted.begin(), removed_sorted.end());
  if (std::adjacent_find(removed_sorted.begin(), removed_sorted.end()) != removed_sorted.end()) {
    throw ActiveSpaceError("duplicate orbital in removal list");
  }
  for (int r : removed_sorted) {
    if (r < 0 || r >= n_mo) {
      throw ActiveSpaceError("removed orbital " + std::to_string(r) + " out of range");
    }
    if (r < n_frozen) {
      throw ActiveSpaceError("orbital " + std::to_string(r) + " is both frozen and removed");
    }
    if (r < n_occ) {
      throw ActiveSpaceError("orbital " + std::to_string(r) +
                             " is occupied; only virtual orbitals can be removed");
    }
  }

  ActiveSpaceHamiltonian out;
  for (int i = 0; i < n_frozen; ++i) out.frozen_orbitals.push_back(i);
  out.removed_orbitals = removed_sorted;
  for (int i = n_frozen; i < n_mo; ++i) {
    if (!std::binary_search(removed_sorted.begin(), removed_sorted.end(), i)) {
      out.active_orbitals.push_back(i);
    }
  }
  const int m = static_cast<int>(out.active_orbitals.size());
  const int n_active_electrons = 2 * (n_occ - n_frozen);
  if (m == 0 || n_active_electrons <= 0) {
    throw ActiveSpaceError("active space is empty");
  }
  out.n_spatial = m;
  out.n_alpha = out.n_beta = n_active_electrons / 2;

  // MO integrals over frozen + active orbitals.
  std::vector<int> used = out.frozen_orbitals;
  used.insert(used.end(), out.active_orbitals.begin(), out.active_orbitals.end());
  const auto nu = static_cast<Eigen::Index>(used.size());
  const auto n_ao = static_cast<Eigen::Index>(ints.n_ao());
  Eigen::MatrixXd c(n_ao, nu);
  for (Eigen::Index k = 0; k < nu; ++k) c.col(k) = scf.coefficients.col(used[k]);

  const Eigen::MatrixXd h_mo = c.transpose() * ints.core_hamiltonian() * c;

  // Four quarter transformations of (mu nu|la si).
  const auto N = static_cast<std::size_t>(n_ao);
  const auto U = static_cast<std::size_t>(nu);
  std::vector<double> t1(U * N * N * N, 0.0);
  for (std::size_t p = 0; p < U; ++p)
    for (std::size_t a = 0; a < N; ++a) {
      const double cp = c(a, p);
      if (cp == 0.0) continue;
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t d = 0; d < N; ++d)
          for (std::size_t e = 0; e < N; ++e)
            t1[((p * N + b) * N + d) * N + e] += cp * ints.eri(a, b, d, e);
    }
  std::vector<double> t2(U * U * N * N, 0.0);
  for (std::size_t p = 0; p < U; ++p)
    for (std::size_t q = 0; q < U; ++q)
      for (std::size_t b = 0; b < N; ++b) {
        const double cq = c(b, q);
        for (std::size_t d = 0; d < N; ++d)
          for (std::size_t e = 0; e < N; ++e)
            t2[((p * U + q) * N + d) * N + e] += cq * t1[((p * N + b) * N + d) * N + e];
      }
  std::vector<double> t3(U * U * U * N, 0.0);
  for (std::size_t p = 0; p < U; ++p)
    for (std::size_t q = 0; q < U; ++q)
      for (std::size_t r = 0; r < U; ++r)
        for (std::size_t d = 0; d < N; ++d) {
          const double cr = c(d, r);
          for (std::size_t e = 0; e < N; ++e)
            t3[((p * U + q) * U + r) * N + e] += cr * t2[((p * U + q) * N + d) * N + e];
        }
  EriTensor mo(U);
  for (std::size_t p = 0; p < U; ++p)
    for (std::size_t q = 0; q < U; ++q)
      for (std::size_t r = 0; r < U; ++r)
        for (std::size_t s = 0; s < U; ++s) {
          double acc = 0.0;
          for (std::size_t e = 0; e < N; ++e) acc += c(e, s) * t3[((p * U + q) * U + r) * N + e];
          mo(p, q, r, s) = acc;
        }

  const auto F = static_cast<std::size_t>(n_frozen);
  double frozen_energy = 0.0;
  for (std::size_t i = 0; i < F; ++i) {
    frozen_energy += 2.0 * h_mo(i, i);
    for (std::size_t j = 0; j < F; ++j) frozen_energy += 2.0 * mo(i, i, j, j) - mo(i, j, j, i);
  }
  out.core_energy = ints.nuclear_repulsion + frozen_energy;

  out.one_body.resize(m, m);
  out.two_body = EriTensor(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      const std::size_t P = F + p;
      const std::size_t Q = F + q;
      double v = h_mo(P, Q);
      for (std::size_t i = 0; i < F; ++i) v += 2.0 * mo(P, Q, i, i) - mo(P, i, i, Q);
      out.one_body(p, q) = v;
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) out.two_body(p, q, r, s) = mo(P, Q, F + r, F + s);
    }
  }
  return out;
}

FermionOperator fermion_hamiltonian(const ActiveSpaceHamiltonian& h) {
  const int n = h.n_spin_orbitals();
  FermionOperator op(n);
  op.add(h.core_energy, {});
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double v = h.h(p, q);
      if (v != 0.0) op.add(v, {create(p), annihilate(q)});
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (p == q || r == s) continue;
          const double v = h.g(p, q, r, s);
          if (v != 0.0) op.add(0.5 * v, {create(p), create(q), annihilate(s), annihilate(r)});
        }
  return op;
}

}  // namespace vqe::chem
