// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: scan, bench, exact, vqe, integrals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vqe/chem/basis.hpp"
#include "vqe/chem/integrals.hpp"
#include "vqe/error.hpp"
#include "vqe/pipeline.hpp"
#include "vqe/scan.hpp"

namespace {

struct PipelineFlags {
  std::string mapping = "parity";
  bool two_qubit_reduction = true;
  bool freeze_core = true;
  std::vector<int> remove_orbitals;
  std::string ansatz = "uccsd";
  int depth = 1;
  std::string optimizer = "qn";
  std::uint64_t seed = 1234;
  int max_iter = 0;  // 0: per-optimizer default
  double tol = 1e-8;
  double rho_begin = 0.5;
  double rho_end = 1e-6;
  std::string exact = "spin_flip";
  bool spin_paired = true;

  void attach(CLI::App* app) {
    app->add_option("--mapping", mapping, "Fermion-to-qubit mapping: jw or parity")
        ->capture_default_str();
    app->add_flag("--two-qubit-reduction,!--no-two-qubit-reduction", two_qubit_reduction,
                  "Remove the two parity qubits (parity mapping only)")
        ->capture_default_str();
    app->add_flag("--freeze-core,!--no-freeze-core", freeze_core, "Freeze chemical core orbitals")
        ->capture_default_str();
    app->add_option("--remove-orbitals", remove_orbitals, "Virtual MO indices to drop, e.g. 3,4")
        ->delimiter(',');
    app->add_flag("--spin-paired,!--no-spin-paired", spin_paired,
                  "Share UCCSD parameters between spin-flip images")
        ->capture_default_str();
    app->add_option("--ansatz", ansatz, "uccsd or hwe")->capture_default_str();
    app->add_option("--depth", depth, "Entangler layers for hwe")->capture_default_str();
    app->add_option("--optimizer", optimizer, "qn, cobyla or spsa")->capture_default_str();
    app->add_option("--seed", seed, "SPSA seed")->capture_default_str();
    app->add_option("--max-iter", max_iter,
                    "Iteration budget (default qn 500, cobyla 5000, spsa 400)");
    app->add_option("--tol", tol, "qn gradient tolerance")->capture_default_str();
    app->add_option("--rho-begin", rho_begin, "COBYLA initial radius")->capture_default_str();
    app->add_option("--rho-end", rho_end, "COBYLA final radius")->capture_default_str();
    app->add_option("--exact", exact, "Exact reference: full, sector, spin_flip or singlet")
        ->capture_default_str();
  }

  vqe::PipelineConfig config() const {
    vqe::PipelineConfig c;
    c.mapping = vqe::parse_mapping_scheme(mapping);
    c.two_qubit_reduction = two_qubit_reduction && c.mapping == vqe::MappingScheme::parity;
    c.freeze_core = freeze_core;
    c.remove_orbitals = remove_orbitals;
    c.ansatz = vqe::parse_ansatz_kind(ansatz);
    c.hwe_depth = depth;
    c.spin_paired = spin_paired;
    c.exact = vqe::parse_exact_mode(exact);
    c.optimizer = optimizer_config();
    return c;
  }

  vqe::OptimizerConfig optimizer_config() const {
    auto o = vqe::scan_optimizer_defaults(vqe::parse_optimizer_kind(optimizer));
    o.seed = seed;
    o.tolerance = tol;
    o.rho_begin = rho_begin;
    o.rho_end = rho_end;
    if (max_iter > 0) o.max_iterations = max_iter;
    return o;
  }
};

struct GridFlags {
  double dmin = 0.1;
  double dmax = 4.0;
  double step = 0.1;

  void attach(CLI::App* app) {
    app->add_option("--dmin", dmin, "First distance (Angstrom)")->capture_default_str();
    app->add_option("--dmax", dmax, "Last distance (Angstrom)")->capture_default_str();
    app->add_option("--step", step, "Grid step (Angstrom)")->capture_default_str();
  }
};

template <typename Writer>
void emit(const std::string& path, Writer write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw vqe::ConfigError("cannot write '" + path + "'");
  write(out);
}

vqe::chem::Molecule molecule_from(const std::string& diatomic, double distance,
                                  const std::string& xyz) {
  if (!xyz.empty()) return vqe::chem::read_xyz_file(xyz);
  if (diatomic.empty()) throw vqe::ConfigError("give --diatomic A,B with --distance, or --xyz");
  const auto [a, b] = vqe::parse_diatomic(diatomic);
  return vqe::chem::build_diatomic(a, b, distance);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum eigensolver workbench"};
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "Dissociation curve of a diatomic");
  std::string scan_diatomic;
  std::string scan_out;
  bool strict = false;
  int threads = 1;
  PipelineFlags scan_flags;
  GridFlags scan_grid;
  scan->add_option("--diatomic", scan_diatomic, "Atoms as A,B (e.g. H,H)")->required();
  scan->add_option("--out", scan_out, "CSV path (stdout if omitted)");
  scan->add_flag("--strict", strict, "Exit nonzero when any row failed");
  scan->add_option("--threads", threads, "Concurrent grid points")->capture_default_str();
  scan_flags.attach(scan);
  scan_grid.attach(scan);

  // bench
  auto* bench = app.add_subcommand("bench", "Repeated timed scans");
  std::vector<std::string> bench_molecules{"H,H"};
  std::vector<std::string> bench_optimizers{"qn", "cobyla", "spsa"};
  int trials = 3;
  std::string bench_out;
  std::string bench_summary;
  PipelineFlags bench_flags;
  GridFlags bench_grid;
  bench->add_option("--molecules", bench_molecules, "Diatomics, e.g. H,H Li,H")
      ->capture_default_str();
  bench->add_option("--optimizers", bench_optimizers, "Subset of qn cobyla spsa")
      ->capture_default_str();
  bench->add_option("--trials", trials, "Repetitions per cell")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV path (stdout if omitted)");
  bench->add_option("--summary", bench_summary, "Mean/log10 summary CSV path");
  bench_flags.attach(bench);
  bench_grid.attach(bench);

  // exact
  auto* exact = app.add_subcommand("exact", "Exact ground energy");
  std::string exact_hamiltonian;
  std::string exact_diatomic;
  std::string exact_xyz;
  double exact_distance = 0.7;
  PipelineFlags exact_flags;
  exact->add_option("--hamiltonian", exact_hamiltonian, "Pauli text file");
  exact->add_option("--diatomic", exact_diatomic, "Atoms as A,B");
  exact->add_option("--xyz", exact_xyz, "XYZ geometry file");
  exact->add_option("--distance", exact_distance, "Bond length (Angstrom)")->capture_default_str();
  exact_flags.attach(exact);

  // vqe
  auto* run = app.add_subcommand("vqe", "Single VQE minimization");
  std::string vqe_hamiltonian;
  std::string vqe_diatomic;
  std::string vqe_xyz;
  double vqe_distance = 0.7;
  PipelineFlags vqe_flags;
  vqe_flags.ansatz = "uccsd";
  run->add_option("--hamiltonian", vqe_hamiltonian, "Pauli text file (hwe or u3 ansatz)");
  run->add_option("--diatomic", vqe_diatomic, "Atoms as A,B");
  run->add_option("--xyz", vqe_xyz, "XYZ geometry file");
  run->add_option("--distance", vqe_distance, "Bond length (Angstrom)")->capture_default_str();
  vqe_flags.attach(run);

  // integrals
  auto* integrals = app.add_subcommand("integrals", "AO integrals, RHF energy, qubit Hamiltonian");
  std::string int_diatomic;
  std::string int_xyz;
  double int_distance = 0.7414;
  std::string pauli_out;
  PipelineFlags int_flags;
  integrals->add_option("--diatomic", int_diatomic, "Atoms as A,B");
  integrals->add_option("--xyz", int_xyz, "XYZ geometry file");
  integrals->add_option("--distance", int_distance, "Bond length (Angstrom)")
      ->capture_default_str();
  integrals->add_option("--pauli-out", pauli_out, "Write the mapped Hamiltonian here");
  int_flags.attach(integrals);

  CLI11_PARSE(app, argc, argv);

  try {
    if (scan->parsed()) {
      const auto [a, b] = vqe::parse_diatomic(scan_diatomic);
      vqe::ScanOptions options;
      options.pipeline = scan_flags.config();
      options.threads = threads;
      const auto grid = vqe::make_grid(scan_grid.dmin, scan_grid.dmax, scan_grid.step);
      const auto rows = vqe::dissociation_scan(a, b, grid, options);
      emit(scan_out, [&](std::ostream& os) { vqe::write_scan_csv(os, rows); });
      int failed = 0;
      for (const auto& r : rows) {
        if (r.failed) {
          ++failed;
          std::cerr << "row " << r.distance << " A failed: " << r.termination << '\n';
        } else if (r.rough) {
          std::cerr << "row " << r.distance << " A: exact energy jumps by more than "
                    << vqe::kSmoothnessLimit << " Ha from the previous row\n";
        }
      }
      if (const auto m = vqe::minimum_row(rows)) {
        std::cerr << "minimum: " << m->molecule << " at " << m->distance
                  << " A, E_vqe = " << fmt(m->e_vqe) << " Ha, E_exact = " << fmt(m->e_exact)
                  << " Ha\n";
      }
      return strict && failed > 0 ? 1 : 0;
    }

    if (bench->parsed()) {
      std::vector<vqe::OptimizerKind> kinds;
      for (const auto& o : bench_optimizers) kinds.push_back(vqe::parse_optimizer_kind(o));
      const auto grid = vqe::make_grid(bench_grid.dmin, bench_grid.dmax, bench_grid.step);
      const auto records =
          vqe::bench(bench_molecules, kinds, trials, grid, bench_flags.config());
      emit(bench_out, [&](std::ostream& os) { vqe::write_bench_csv(os, records); });
      if (!bench_summary.empty()) {
        emit(bench_summary, [&](std::ostream& os) { vqe::write_bench_summary(os, records); });
      } else {
        vqe::write_bench_summary(std::cerr, records);
      }
      return 0;
    }

    if (exact->parsed()) {
      if (!exact_hamiltonian.empty()) {
        const auto h = vqe::read_pauli_file(exact_hamiltonian);
        std::cout << "exact_energy_hartree " << fmt(vqe::exact_ground_energy(h)) << '\n';
        return 0;
      }
      const auto cfg = exact_flags.config();
      const auto p = vqe::build_problem(molecule_from(exact_diatomic, exact_distance, exact_xyz), cfg);
      std::cout << "molecule " << p.molecule.label() << '\n'
                << "qubits " << p.n_qubits() << '\n'
                << "hf_energy_hartree " << fmt(p.scf.total_energy) << '\n'
                << "exact_energy_hartree " << fmt(vqe::exact_energy(p, cfg.exact)) << '\n';
      return 0;
    }

    if (run->parsed()) {
      const auto cfg = vqe_flags.config();
      vqe::VQEResult r;
      if (!vqe_hamiltonian.empty()) {
        const auto h = vqe::read_pauli_file(vqe_hamiltonian);
        const auto kind = vqe::parse_ansatz_kind(vqe_flags.ansatz);
        if (kind == vqe::AnsatzKind::uccsd) {
          throw vqe::ConfigError("uccsd needs a molecule; use --ansatz hwe or u3 with --hamiltonian");
        }
        const auto circuit = kind == vqe::AnsatzKind::single_qubit_u3
                                 ? vqe::hardware_efficient_circuit(1, 0)
                                 : vqe::hardware_efficient_circuit(h.n_qubits(), cfg.hwe_depth);
        r = vqe::run_vqe(h, circuit, cfg.optimizer);
        r.exact_energy = vqe::exact_ground_energy(h);
      } else {
        const auto p = vqe::build_problem(molecule_from(vqe_diatomic, vqe_distance, vqe_xyz), cfg);
        r = vqe::run_vqe(p.hamiltonian, p.ansatz, cfg.optimizer);
        r.exact_energy = vqe::exact_energy(p, cfg.exact);
      }
      std::cout << "energy_hartree " << fmt(r.energy) << '\n'
                << "exact_hartree " << fmt(*r.exact_energy) << '\n'
                << "gap_hartree " << fmt(*r.gap()) << '\n'
                << "evaluations " << r.n_evaluations() << '\n'
                << "wall_time_s " << r.wall_time_s << '\n'
                << "termination " << vqe::to_string(r.trace.termination) << '\n';
      return 0;
    }

    if (integrals->parsed()) {
      const auto m = molecule_from(int_diatomic, int_distance, int_xyz);
      const auto basis = vqe::chem::sto3g_basis(m);
      const auto ints = vqe::chem::compute_integrals(m, basis);
      Eigen::IOFormat f(10, 0, " ", "\n");
      std::cout << "molecule " << m.label() << "\nbasis_functions " << ints.n_ao()
                << "\nnuclear_repulsion " << fmt(ints.nuclear_repulsion) << "\n\noverlap\n"
                << ints.overlap.format(f) << "\n\nkinetic\n"
                << ints.kinetic.format(f) << "\n\nnuclear_attraction\n"
                << ints.nuclear.format(f) << '\n';
      const auto cfg = int_flags.config();
      const auto p = vqe::build_problem(m, cfg);
      std::cout << "\nrhf_energy " << fmt(p.scf.total_energy) << "\nrhf_iterations "
                << p.scf.iterations << "\nqubits " << p.n_qubits() << "\npauli_terms "
                << p.hamiltonian.size() << '\n';
      if (!pauli_out.empty()) {
        emit(pauli_out, [&](std::ostream& os) { vqe::write_pauli_text(os, p.hamiltonian); });
      }
      return 0;
    }
  } catch (const vqe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
