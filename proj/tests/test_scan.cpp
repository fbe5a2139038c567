// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "vqe/error.hpp"
#include "vqe/scan.hpp"

namespace vqe {
namespace {

ScanOptions qn_options() {
  ScanOptions o;
  o.pipeline.optimizer.kind = OptimizerKind::quasi_newton;
  o.pipeline.optimizer.tolerance = 1e-8;
  return o;
}

TEST(Grid, Default) {
  const auto g = default_grid();
  ASSERT_EQ(g.size(), 40u);
  EXPECT_DOUBLE_EQ(g.front(), 0.1);
  EXPECT_DOUBLE_EQ(g.back(), 4.0);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], 0.1 * (i + 1), 1e-12);
}

TEST(Grid, Custom) {
  EXPECT_EQ(make_grid(0.5, 1.0, 0.25).size(), 3u);
  EXPECT_EQ(make_grid(1.0, 1.0, 0.1).size(), 1u);
  EXPECT_THROW(make_grid(0.0, 1.0, 0.1), GeometryError);
  EXPECT_THROW(make_grid(2.0, 1.0, 0.1), GeometryError);
  EXPECT_THROW(make_grid(0.5, 1.0, 0.0), GeometryError);
}

TEST(Scan, DistancePreconditions) {
  EXPECT_THROW(dissociation_scan("H", "H", {0.5, 0.4}, ScanOptions{}), GeometryError);
  EXPECT_THROW(dissociation_scan("H", "H", {-0.5}, ScanOptions{}), GeometryError);
}

TEST(Scan, HydrogenDefaultGrid) {
  const auto rows = dissociation_scan("H", "H", default_grid(), qn_options());
  ASSERT_EQ(rows.size(), 40u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.ok()) << r.termination;
    EXPECT_EQ(r.molecule, "H2");
    EXPECT_EQ(r.optimizer, "qn");
    EXPECT_GE(r.gap, -1e-9) << r.distance;
    EXPECT_LT(r.gap, 1e-6) << r.distance;
    // Below 0.4 A nuclear repulsion alone moves the curve by more than the limit per
    // step; the first row has no predecessor.
    EXPECT_EQ(r.rough, r.distance > 0.15 && r.distance < 0.35) << r.distance;
  }
  const auto best = minimum_row(rows);
  ASSERT_TRUE(best);
  EXPECT_NEAR(best->distance, 0.7, 1e-12);
  EXPECT_NEAR(best->e_vqe, -1.136, 5e-3);
}

TEST(Scan, ThreadedOrderMatchesSerial) {
  const std::vector<double> grid{0.3, 0.6, 0.9, 1.4, 2.0, 2.7, 3.5};
  auto serial = qn_options();
  auto threaded = serial;
  threaded.threads = 3;
  const auto a = dissociation_scan("H", "H", grid, serial);
  const auto b = dissociation_scan("H", "H", grid, threaded);
  ASSERT_EQ(a.size(), grid.size());
  ASSERT_EQ(b.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(a[i].distance, grid[i]);
    EXPECT_EQ(b[i].distance, grid[i]);
    EXPECT_EQ(a[i].e_vqe, b[i].e_vqe);
    EXPECT_EQ(a[i].e_exact, b[i].e_exact);
    EXPECT_EQ(a[i].n_evals, b[i].n_evals);
  }
}

TEST(Scan, FailedPointsAreFlaggedAndScanContinues) {
  auto o = qn_options();
  o.pipeline.scf.max_iterations = 1;
  const std::vector<double> grid{0.7, 1.5};
  const auto rows = dissociation_scan("Li", "H", grid, o);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.failed);
    EXPECT_EQ(r.termination.rfind("failed: ", 0), 0u) << r.termination;
    EXPECT_TRUE(std::isnan(r.e_vqe));
  }
  EXPECT_FALSE(minimum_row(rows));
}

TEST(Scan, MixedFailureKeepsGoodRows) {
  std::vector<ScanRow> rows(3);
  rows[0].e_vqe = -1.0;
  rows[1].failed = true;
  rows[1].e_vqe = std::nan("");
  rows[2].e_vqe = -1.2;
  rows[2].distance = 0.9;
  const auto best = minimum_row(rows);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->distance, 0.9);
}

TEST(SmoothnessGuard, FlagsJumps) {
  std::vector<ScanRow> rows(5);
  const double exact[] = {-1.0, -1.1, -0.4, -0.45, -2.0};
  for (int i = 0; i < 5; ++i) rows[static_cast<std::size_t>(i)].e_exact = exact[i];
  rows[3].failed = true;
  apply_smoothness_guard(rows);
  EXPECT_FALSE(rows[0].rough);
  EXPECT_FALSE(rows[1].rough);
  EXPECT_TRUE(rows[2].rough);
  EXPECT_FALSE(rows[3].rough);  // failed rows are skipped
  EXPECT_TRUE(rows[4].rough);   // compared against row 2
}

TEST(ScanCsv, RoundTrip) {
  std::vector<ScanRow> rows(3);
  rows[0] = {"H2", 0.1, -0.1 / 3.0, 1e-300, std::nextafter(1.0, 2.0), 12345, 0.125, 0.5,
             "converged", "cobyla"};
  rows[1] = {"LiH", 1.6, -7.882096601812345, -7.882096601898765, 8.6e-11, 7, 3.3e-7, 0.0,
             "stagnation", "quasi_newton"};
  rows[2].molecule = "FH";
  rows[2].distance = 0.2;
  rows[2].failed = true;
  rows[2].termination = "failed: SCF did not converge";
  rows[2].optimizer = "spsa";
  rows[2].e_vqe = rows[2].e_exact = rows[2].gap = std::nan("");

  std::stringstream buf;
  write_scan_csv(buf, rows);
  EXPECT_EQ(buf.str().substr(0, buf.str().find('\n')), kScanCsvHeader);
  const auto back = read_scan_csv(buf);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].molecule, rows[i].molecule);
    EXPECT_EQ(back[i].distance, rows[i].distance);
    EXPECT_EQ(back[i].e_vqe, rows[i].e_vqe);
    EXPECT_EQ(back[i].e_exact, rows[i].e_exact);
    EXPECT_EQ(back[i].gap, rows[i].gap);
    EXPECT_EQ(back[i].n_evals, rows[i].n_evals);
    EXPECT_EQ(back[i].wall_time_s, rows[i].wall_time_s);
    EXPECT_EQ(back[i].termination, rows[i].termination);
    EXPECT_EQ(back[i].optimizer, rows[i].optimizer);
    EXPECT_FALSE(back[i].failed);
  }
  EXPECT_TRUE(back[2].failed);
  EXPECT_TRUE(std::isnan(back[2].e_vqe));
  EXPECT_EQ(back[2].termination, rows[2].termination);
}

TEST(ScanCsv, Malformed) {
  std::istringstream bad_header("molecule,distance\n");
  EXPECT_THROW(read_scan_csv(bad_header), ParseError);
  std::istringstream short_row(std::string(kScanCsvHeader) + "\nH2,0.7,1\n");
  EXPECT_THROW(read_scan_csv(short_row), ParseError);
  std::istringstream bad_number(std::string(kScanCsvHeader) +
                                "\nH2,x,1,1,0,3,0.1,converged,spsa\n");
  EXPECT_THROW(read_scan_csv(bad_number), ParseError);
}

TEST(Diatomic, Parse) {
  EXPECT_EQ(parse_diatomic("Li,H"), std::make_pair(std::string("Li"), std::string("H")));
  EXPECT_THROW(parse_diatomic("LiH"), ConfigError);
  EXPECT_THROW(parse_diatomic("Li,H,H"), ConfigError);
}

TEST(Bench, Cardinality) {
  PipelineConfig cfg;
  const std::vector<double> grid{0.7, 1.2};
  const auto records =
      bench({"H,H"}, {OptimizerKind::quasi_newton, OptimizerKind::cobyla}, 3, grid, cfg);
  ASSERT_EQ(records.size(), 6u);
  std::set<std::tuple<std::string, std::string, int>> keys;
  for (const auto& r : records) {
    keys.emplace(r.molecule, r.optimizer, r.trial);
    EXPECT_EQ(r.molecule, "H2");
    EXPECT_EQ(r.failed_rows, 0);
    EXPECT_GE(r.total_wall_time_s, 0.0);
  }
  EXPECT_EQ(keys.size(), 6u);
  // Same cell: identical work, only timing and trial index differ.
  EXPECT_EQ(records[0].total_evals, records[1].total_evals);
  EXPECT_EQ(records[1].total_evals, records[2].total_evals);
  EXPECT_NE(records[0].total_evals, records[3].total_evals);

  std::stringstream csv;
  write_bench_csv(csv, records);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  int n = 0;
  while (std::getline(csv, line)) ++n;
  EXPECT_EQ(n, 6);

  std::stringstream summary;
  write_bench_summary(summary, records);
  n = 0;
  while (std::getline(summary, line)) ++n;
  EXPECT_EQ(n, 3);  // header + one line per cell
}

TEST(Bench, AllOptimizersShape) {
  const auto records = bench({"H,H"}, {OptimizerKind::quasi_newton, OptimizerKind::cobyla,
                                       OptimizerKind::spsa},
                             3, {0.7}, PipelineConfig{});
  EXPECT_EQ(records.size(), 9u);
  EXPECT_THROW(bench({"H,H"}, {OptimizerKind::spsa}, 0, {0.7}, PipelineConfig{}), ConfigError);
}

}  // namespace
}  // namespace vqe
