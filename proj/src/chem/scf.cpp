// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/scf.hpp"

#include <cmath>
#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

#include <unsupported/Eigen/KroneckerProduct>

#include "vqe/error.hpp"

namespace vqe::chem {
namespace {

struct Diagonalized {
  Eigen::VectorXd energies;
  Eigen::MatrixXd coefficients;
};

Diagonalized diagonalize_fock(const Eigen::MatrixXd& fock, const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd f_ortho = x.transpose() * fock * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(f_ortho);
  return {solver.eigenvalues(), x * solver.eigenvectors()};
}

Eigen::MatrixXd closed_shell_density(const Eigen::MatrixXd& c, int n_occupied) {
  const auto occ = c.leftCols(n_occupied);
  return 2.0 * occ * occ.transpose();
}

double electronic_energy(const Eigen::MatrixXd& density, const Eigen::MatrixXd& core,
                         const Eigen::MatrixXd& fock) {
  return 0.5 * (density.cwiseProduct(core + fock)).sum();
}

// Fock combination minimizing the norm of the combined commutator error.
Eigen::MatrixXd diis_extrapolate(const std::deque<Eigen::MatrixXd>& focks,
                                 const std::deque<Eigen::MatrixXd>& errors) {
  const auto n = static_cast<Eigen::Index>(focks.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      b(i, j) = b(j, i) = errors[static_cast<std::size_t>(i)]
                              .cwiseProduct(errors[static_cast<std::size_t>(j)])
                              .sum();
    }
    b(i, n) = b(n, i) = -1.0;
  }
  rhs(n) = -1.0;
  const Eigen::VectorXd c = b.fullPivLu().solve(rhs);
  if (!c.allFinite()) return focks.back();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(focks.back().rows(), focks.back().cols());
  for (Eigen::Index i = 0; i < n; ++i) f += c(i) * focks[static_cast<std::size_t>(i)];
  return f;
}

}  // namespace

Eigen::MatrixXd two_electron_matrix(const EriTensor& eri, const Eigen::MatrixXd& density) {
  const auto n = static_cast<std::size_t>(density.rows());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(density.rows(), density.cols());
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t s = 0; s < n; ++s) {
          acc += density(l, s) * (eri(m, v, s, l) - 0.5 * eri(m, l, s, v));
        }
      }
      g(m, v) = acc;
    }
  }
  return g;
}

namespace {

SCFResult finish(const IntegralSet& ints, const Eigen::MatrixXd& x, const Eigen::MatrixXd& core,
                 const Eigen::MatrixXd& density, int n_occ, int iterations) {
  SCFResult r;
  const Eigen::MatrixXd final_fock = core + two_electron_matrix(ints.eri, density);
  const Diagonalized orbitals = diagonalize_fock(final_fock, x);
  r.coefficients = orbitals.coefficients;
  r.orbital_energies = orbitals.energies;
  r.density = closed_shell_density(r.coefficients, n_occ);
  const Eigen::MatrixXd fock_out = core + two_electron_matrix(ints.eri, r.density);
  r.nuclear_repulsion = ints.nuclear_repulsion;
  r.total_energy = electronic_energy(r.density, core, fock_out) + ints.nuclear_repulsion;
  r.n_occupied = n_occ;
  r.converged = true;
  r.iterations = iterations;
  return r;
}

// Roothaan iterations from a starting density; `iterations` accumulates across restarts.
SCFResult iterate(const IntegralSet& ints, const Eigen::MatrixXd& x, const Eigen::MatrixXd& core,
                  Eigen::MatrixXd density, int n_occ, const ScfOptions& options,
                  int& iterations) {
  double previous_energy = 0.0;
  double energy = 0.0;
  bool mixing = false;
  std::deque<Eigen::MatrixXd> focks;
  std::deque<Eigen::MatrixXd> errors;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    ++iterations;
    Eigen::MatrixXd fock = core + two_electron_matrix(ints.eri, density);
    energy = electronic_energy(density, core, fock) + ints.nuclear_repulsion;
    if (iter > options.mixing_start) mixing = true;
    if (options.diis_size > 1 && !mixing) {
      const Eigen::MatrixXd fds = fock * density * ints.overlap;
      focks.push_back(fock);
      errors.push_back(x.transpose() * (fds - fds.transpose()) * x);
      if (static_cast<int>(focks.size()) > options.diis_size) {
        focks.pop_front();
        errors.pop_front();
      }
      if (focks.size() >= 2) fock = diis_extrapolate(focks, errors);
    }
    const Diagonalized orbitals = diagonalize_fock(fock, x);
    Eigen::MatrixXd next = closed_shell_density(orbitals.coefficients, n_occ);
    if (mixing) next = options.mixing * next + (1.0 - options.mixing) * density;

    const double d_change = (next - density).cwiseAbs().maxCoeff();
    const double e_change = std::abs(energy - previous_energy);
    density = next;
    previous_energy = energy;
    if (iter > 1 && d_change < options.density_tolerance &&
        e_change < options.energy_tolerance) {
      return finish(ints, x, core, density, n_occ, iterations);
    }
  }
  throw ConvergenceError("RHF did not converge in " + std::to_string(options.max_iterations) +
                             " iterations",
                         energy);
}

struct Instability {
  double eigenvalue = 0.0;
  Eigen::MatrixXd direction;  // n_virtual x n_occupied
};

// Lowest eigenpair of the real singlet orbital Hessian (A + B).
Instability singlet_instability(const SCFResult& r, const EriTensor& eri) {
  const auto n = static_cast<Eigen::Index>(r.coefficients.cols());
  const Eigen::Index n_occ = r.n_occupied;
  const Eigen::Index n_vir = n - n_occ;
  if (n_occ == 0 || n_vir == 0) return {};
  const auto nu = static_cast<std::size_t>(n);
  const Eigen::MatrixXd& c = r.coefficients;

  // (pq|rs) in the MO basis as an (n^2 x n^2) pair matrix.
  Eigen::MatrixXd pairs(n * n, n * n);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for (std::size_t k = 0; k < nu; ++k)
        for (std::size_t l = 0; l < nu; ++l)
          pairs(static_cast<Eigen::Index>(i * nu + j), static_cast<Eigen::Index>(k * nu + l)) =
              eri(i, j, k, l);
  const Eigen::MatrixXd cc = Eigen::kroneckerProduct(c, c).eval();
  const Eigen::MatrixXd mo_pairs = cc.transpose() * pairs * cc;
  auto mo = [&](Eigen::Index p, Eigen::Index q, Eigen::Index r2, Eigen::Index s) {
    return mo_pairs(p * n + q, r2 * n + s);
  };

  const Eigen::Index dim = n_occ * n_vir;
  Eigen::MatrixXd hessian(dim, dim);
  for (Eigen::Index i = 0; i < n_occ; ++i)
    for (Eigen::Index av = 0; av < n_vir; ++av)
      for (Eigen::Index j = 0; j < n_occ; ++j)
        for (Eigen::Index bv = 0; bv < n_vir; ++bv) {
          const Eigen::Index aa = n_occ + av;
          const Eigen::Index bb = n_occ + bv;
          double v = 4.0 * mo(i, aa, j, bb) - mo(i, bb, j, aa) - mo(i, j, aa, bb);
          if (i == j && av == bv) v += r.orbital_energies(aa) - r.orbital_energies(i);
          hessian(i * n_vir + av, j * n_vir + bv) = v;
        }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian);
  Instability out;
  out.eigenvalue = solver.eigenvalues()(0);
  out.direction.resize(n_vir, n_occ);
  for (Eigen::Index i = 0; i < n_occ; ++i)
    for (Eigen::Index av = 0; av < n_vir; ++av)
      out.direction(av, i) = solver.eigenvectors()(i * n_vir + av, 0);
  return out;
}

// Closed-shell density of occupied orbitals mixed with virtuals along `direction`.
Eigen::MatrixXd rotated_density(const SCFResult& r, const Eigen::MatrixXd& overlap,
                                const Eigen::MatrixXd& direction, double step) {
  const Eigen::Index n_occ = r.n_occupied;
  const auto& c = r.coefficients;
  const Eigen::MatrixXd occ =
      c.leftCols(n_occ) + step * c.rightCols(c.cols() - n_occ) * direction;
  const Eigen::MatrixXd metric = occ.transpose() * overlap * occ;
  return 2.0 * occ * metric.inverse() * occ.transpose();
}


Eigen::MatrixXd loewdin(const Eigen::MatrixXd& overlap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_solver(overlap);
  if (s_solver.eigenvalues().minCoeff() <= 1e-10) {
    throw ConsistencyError("overlap matrix is not positive definite");
  }
  return s_solver.eigenvectors() *
         s_solver.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         s_solver.eigenvectors().transpose();
}

SCFResult follow_instabilities(const IntegralSet& ints, const Eigen::MatrixXd& x,
                               const Eigen::MatrixXd& core, const Eigen::MatrixXd& start,
                               int n_occ, const ScfOptions& options, int& iterations) {
  SCFResult best = iterate(ints, x, core, start, n_occ, options, iterations);
  for (int round = 0; round < options.stability_rounds; ++round) {
    const Instability inst = singlet_instability(best, ints.eri);
    if (inst.eigenvalue >= -options.stability_threshold) break;
    // Coarse line search along the unstable mode, then reconverge from the best point.
    double best_energy = best.total_energy;
    Eigen::MatrixXd restart;
    for (int k = 1; k <= 12; ++k) {
      Eigen::MatrixXd d = rotated_density(best, ints.overlap, inst.direction, 0.1 * k);
      const Eigen::MatrixXd fock = core + two_electron_matrix(ints.eri, d);
      const double e = electronic_energy(d, core, fock) + ints.nuclear_repulsion;
      if (e < best_energy) {
        best_energy = e;
        restart = std::move(d);
      }
    }
    if (restart.size() == 0) break;
    try {
      SCFResult next = iterate(ints, x, core, restart, n_occ, options, iterations);
      if (next.total_energy >= best.total_energy - options.energy_tolerance) break;
      best = std::move(next);
    } catch (const ConvergenceError&) {
      break;
    }
  }
  return best;
}

// Spherically averaged free-atom density: aufbau filling with degenerate shells shared evenly.
Eigen::MatrixXd fractional_atom_density(const IntegralSet& ints, int n_electrons) {
  const Eigen::MatrixXd x = loewdin(ints.overlap);
  const Eigen::MatrixXd core = ints.core_hamiltonian();
  const auto n = static_cast<Eigen::Index>(ints.n_ao());
  auto density_of = [&](const Diagonalized& orbitals) {
    Eigen::VectorXd occ = Eigen::VectorXd::Zero(n);
    double left = n_electrons;
    for (Eigen::Index i = 0; i < n && left > 0.0;) {
      Eigen::Index j = i + 1;
      while (j < n && orbitals.energies(j) - orbitals.energies(i) < 1e-4) ++j;
      const double share = std::min(2.0 * static_cast<double>(j - i), left);
      for (Eigen::Index k = i; k < j; ++k) occ(k) = share / static_cast<double>(j - i);
      left -= share;
      i = j;
    }
    return Eigen::MatrixXd(orbitals.coefficients * occ.asDiagonal() *
                           orbitals.coefficients.transpose());
  };
  Eigen::MatrixXd density = density_of(diagonalize_fock(core, x));
  for (int iter = 0; iter < 100; ++iter) {
    const Eigen::MatrixXd fock = core + two_electron_matrix(ints.eri, density);
    const Eigen::MatrixXd next = 0.5 * (density + density_of(diagonalize_fock(fock, x)));
    const double change = (next - density).cwiseAbs().maxCoeff();
    density = next;
    if (change < 1e-8) break;
  }
  return density;
}

}  // namespace

SCFResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options) {
  return run_rhf(ints, n_electrons, options, {});
}

SCFResult run_rhf(const IntegralSet& ints, int n_electrons, const ScfOptions& options,
                  const std::vector<Eigen::MatrixXd>& initial_densities) {
  const auto n_ao = static_cast<int>(ints.n_ao());
  if (n_electrons < 0 || n_electrons % 2 != 0) {
    throw ConfigError("restricted Hartree-Fock needs an even electron count, got " +
                      std::to_string(n_electrons));
  }
  if (n_electrons > 2 * n_ao) {
    throw ConfigError(std::to_string(n_electrons) + " electrons do not fit in " +
                      std::to_string(n_ao) + " spatial orbitals");
  }
  const int n_occ = n_electrons / 2;
  const Eigen::MatrixXd x = loewdin(ints.overlap);
  const Eigen::MatrixXd core = ints.core_hamiltonian();

  std::vector<Eigen::MatrixXd> starts;
  starts.push_back(closed_shell_density(diagonalize_fock(core, x).coefficients, n_occ));
  for (const auto& d : initial_densities) {
    if (d.rows() != n_ao || d.cols() != n_ao) {
      throw ConsistencyError("initial density does not match the basis size");
    }
    starts.push_back(d);
  }

  int iterations = 0;
  std::optional<SCFResult> best;
  std::optional<ConvergenceError> failure;
  // DIIS and plain Roothaan iterations can settle into different minima from the same start.
  std::vector<ScfOptions> variants{options};
  if (options.diis_size > 1) {
    variants.push_back(options);
    variants.back().diis_size = 0;
  }
  for (const auto& start : starts) {
    for (const auto& variant : variants) {
      try {
        SCFResult r = follow_instabilities(ints, x, core, start, n_occ, variant, iterations);
        if (!best || r.total_energy < best->total_energy - options.energy_tolerance) {
          best = std::move(r);
        }
      } catch (const ConvergenceError& e) {
        if (!failure) failure = e;
      }
    }
  }
  if (!best) throw *failure;
  best->iterations = iterations;
  return *best;
}

Eigen::MatrixXd atomic_density_guess(const Molecule& m, const ShellBasis& b) {
  const auto n = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd density = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t ai = 0; ai < m.atoms.size(); ++ai) {
    std::vector<Eigen::Index> rows;
    for (std::size_t f = 0; f < b.functions.size(); ++f) {
      if (b.functions[f].atom == static_cast<int>(ai)) rows.push_back(static_cast<Eigen::Index>(f));
    }
    Molecule atom;
    atom.atoms.push_back(m.atoms[ai]);
    const ShellBasis atom_basis = sto3g_basis(atom);
    const IntegralSet ints = compute_integrals(atom, atom_basis);
    const Eigen::MatrixXd block = fractional_atom_density(ints, m.atoms[ai].atomic_number);
    if (static_cast<std::size_t>(block.rows()) != rows.size()) {
      throw ConsistencyError("atomic basis does not match the molecular basis");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        density(rows[i], rows[j]) =
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return density;
}

std::optional<Eigen::MatrixXd> stretched_density_guess(const Molecule& m,
                                                       const ScfOptions& options,
                                                       double start_length, double step) {
  if (m.atoms.size() < 2 || step <= 0.0) return std::nullopt;
  double shortest = std::numeric_limits<double>::infinity();
  Vec3 centroid{};
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    for (int k = 0; k < 3; ++k) centroid[k] += m.atoms[i].position[k] / m.atoms.size();
    for (std::size_t j = i + 1; j < m.atoms.size(); ++j) {
      double r2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = m.atoms[i].position[k] - m.atoms[j].position[k];
        r2 += d * d;
      }
      shortest = std::min(shortest, std::sqrt(r2));
    }
  }
  if (shortest <= start_length + step) return std::nullopt;

  std::optional<Eigen::MatrixXd> density;
  for (double length = start_length; length < shortest - 1e-9; length += step) {
    Molecule scaled = m;
    const double factor = length / shortest;
    for (auto& atom : scaled.atoms) {
      for (int k = 0; k < 3; ++k) {
        atom.position[k] = centroid[k] + factor * (atom.position[k] - centroid[k]);
      }
    }
    const ShellBasis basis = sto3g_basis(scaled);
    const IntegralSet ints = compute_integrals(scaled, basis);
    std::vector<Eigen::MatrixXd> starts{atomic_density_guess(scaled, basis)};
    if (density) {
      // Only the carried density once a bonded solution is in hand.
      try {
        const Eigen::MatrixXd x = loewdin(ints.overlap);
        int iterations = 0;
        density = iterate(ints, x, ints.core_hamiltonian(), *density, scaled.n_electrons() / 2,
                          options, iterations)
                      .density;
        continue;
      } catch (const ConvergenceError&) {
      }
    }
    density = run_rhf(ints, scaled.n_electrons(), options, starts).density;
  }
  return density;
}

}  // namespace vqe::chem
