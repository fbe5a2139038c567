// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqe/pipeline.hpp"

namespace vqe {

inline constexpr double kSmoothnessLimit = 0.5;  // Hartree between adjacent grid points

struct ScanRow {
  std::string molecule;
  double distance = 0.0;  // Angstrom
  double e_vqe = 0.0;
  double e_exact = 0.0;
  double gap = 0.0;
  long n_evals = 0;
  double wall_time_s = 0.0;  // optimizer loop
  double build_time_s = 0.0;  // integrals, SCF, mapping
  /// converged / max_iterations / stagnation, or "failed: <reason>".
  std::string termination;
  std::string optimizer;
  bool failed = false;
  bool rough = false;  // exact energy jumps by more than kSmoothnessLimit from a neighbour

  bool ok() const noexcept { return !failed; }
};

struct ScanOptions {
  PipelineConfig pipeline;
  int threads = 1;
};

/// 0.1 .. 4.0 Angstrom in 0.1 steps (40 points).
std::vector<double> default_grid();
/// Inclusive grid from dmin to dmax; rounding is done on the step count.
std::vector<double> make_grid(double dmin, double dmax, double step);

/**
 * @brief Ground-state curve of a diatomic over a distance grid.
 *
 * Rows come back in distance order. Points run concurrently when
 * threads > 1. A failing point is flagged and the scan continues.
 */
std::vector<ScanRow> dissociation_scan(const std::string& element_a, const std::string& element_b,
                                       const std::vector<double>& distances,
                                       const ScanOptions& options);

/// Flags rows whose exact energy differs from a successful neighbour by more than the limit.
void apply_smoothness_guard(std::vector<ScanRow>& rows, double limit = kSmoothnessLimit);

/// Lowest-VQE-energy successful row.
std::optional<ScanRow> minimum_row(const std::vector<ScanRow>& rows);

inline constexpr const char* kScanCsvHeader =
    "molecule,distance_angstrom,e_vqe_hartree,e_exact_hartree,gap_hartree,n_evals,wall_time_s,"
    "termination,optimizer";

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
std::vector<ScanRow> read_scan_csv(std::istream& in);

struct BenchRecord {
  std::string molecule;
  std::string optimizer;
  int trial = 0;
  double total_wall_time_s = 0.0;
  long total_evals = 0;
  int failed_rows = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "molecule,optimizer,trial,total_wall_time_s,total_evals";

/// Molecule spec "A,B" (e.g. "Li,H").
std::pair<std::string, std::string> parse_diatomic(const std::string& text);

/**
 * @brief Repeat full scans per (molecule, optimizer) and record totals.
 *
 * Trials run one after another on a single thread. Timings are the sum of
 * per-row build and optimizer times.
 */
std::vector<BenchRecord> bench(const std::vector<std::string>& molecules,
                               const std::vector<OptimizerKind>& optimizers, int trials,
                               const std::vector<double>& distances, const PipelineConfig& cfg);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Mean wall time and log10 of it per (molecule, optimizer).
void write_bench_summary(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace vqe
