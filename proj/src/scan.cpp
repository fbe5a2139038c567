// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "vqe/error.hpp"

namespace vqe {
namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("scan CSV line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

ScanRow run_point(const std::string& a, const std::string& b, double d, const ScanOptions& options) {
  ScanRow row;
  row.distance = d;
  row.optimizer = to_string(options.pipeline.optimizer.kind);
  try {
    const auto molecule = chem::build_diatomic(a, b, d);
    row.molecule = molecule.label();
    const QubitProblem p = build_problem(molecule, options.pipeline);
    row.build_time_s = p.build_time_s;
    row.e_exact = exact_energy(p, options.pipeline.exact);
    const VQEResult r = run_vqe(p.hamiltonian, p.ansatz, options.pipeline.optimizer);
    row.e_vqe = r.energy;
    row.gap = r.energy - row.e_exact;
    row.n_evals = r.n_evaluations();
    row.wall_time_s = r.wall_time_s;
    row.termination = to_string(r.trace.termination);
  } catch (const Error& e) {
    if (row.molecule.empty()) row.molecule = a + b;
    row.failed = true;
    row.termination = std::string("failed: ") + e.what();
    row.e_vqe = row.e_exact = row.gap = std::nan("");
  }
  return row;
}

}  // namespace

std::vector<double> default_grid() { return make_grid(0.1, 4.0, 0.1); }

std::vector<double> make_grid(double dmin, double dmax, double step) {
  if (!(dmin > 0.0) || !(step > 0.0) || dmax < dmin) {
    throw GeometryError("grid needs 0 < dmin <= dmax and step > 0");
  }
  const auto n = static_cast<int>(std::floor((dmax - dmin) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    // Round to 1e-10 so that 0.1 * 7 prints as 0.7.
    out.push_back(std::round((dmin + i * step) * 1e10) / 1e10);
  }
  return out;
}

std::vector<ScanRow> dissociation_scan(const std::string& element_a, const std::string& element_b,
                                       const std::vector<double>& distances,
                                       const ScanOptions& options) {
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!(distances[i] > 0.0)) throw GeometryError("scan distances must be positive");
    if (i > 0 && distances[i] <= distances[i - 1]) {
      throw GeometryError("scan distances must be strictly ascending");
    }
  }
  std::vector<ScanRow> rows(distances.size());
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(distances.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < distances.size(); ++i) {
      rows[i] = run_point(element_a, element_b, distances[i], options);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < distances.size(); i = next++) {
          rows[i] = run_point(element_a, element_b, distances[i], options);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  apply_smoothness_guard(rows);
  return rows;
}

void apply_smoothness_guard(std::vector<ScanRow>& rows, double limit) {
  const ScanRow* prev = nullptr;
  for (auto& row : rows) {
    if (row.failed) continue;
    if (prev && std::abs(row.e_exact - prev->e_exact) >= limit) row.rough = true;
    prev = &row;
  }
}

std::optional<ScanRow> minimum_row(const std::vector<ScanRow>& rows) {
  std::optional<ScanRow> best;
  for (const auto& r : rows) {
    if (r.failed) continue;
    if (!best || r.e_vqe < best->e_vqe) best = r;
  }
  return best;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanCsvHeader << '\n';
  for (const auto& r : rows) {
    std::string term = r.termination;
    std::replace(term.begin(), term.end(), ',', ';');
    std::replace(term.begin(), term.end(), '\n', ' ');
    out << r.molecule << ',' << format_double(r.distance) << ',' << format_double(r.e_vqe) << ','
        << format_double(r.e_exact) << ',' << format_double(r.gap) << ',' << r.n_evals << ','
        << format_double(r.wall_time_s) << ',' << term << ',' << r.optimizer << '\n';
  }
}

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader) {
    throw ParseError("scan CSV header mismatch");
  }
  std::vector<ScanRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw ParseError("scan CSV line " + std::to_string(line_no) + ": expected 9 fields");
    }
    ScanRow r;
    r.molecule = f[0];
    r.distance = parse_double(f[1], line_no);
    r.e_vqe = parse_double(f[2], line_no);
    r.e_exact = parse_double(f[3], line_no);
    r.gap = parse_double(f[4], line_no);
    r.n_evals = std::stol(f[5]);
    r.wall_time_s = parse_double(f[6], line_no);
    r.termination = f[7];
    r.optimizer = f[8];
    r.failed = r.termination.rfind("failed", 0) == 0;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::pair<std::string, std::string> parse_diatomic(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
    throw ConfigError("diatomic must be given as A,B (got '" + text + "')");
  }
  return {parts[0], parts[1]};
}

std::vector<BenchRecord> bench(const std::vector<std::string>& molecules,
                               const std::vector<OptimizerKind>& optimizers, int trials,
                               const std::vector<double>& distances, const PipelineConfig& cfg) {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  std::vector<BenchRecord> out;
  for (const auto& spec : molecules) {
    const auto [a, b] = parse_diatomic(spec);
    for (const auto kind : optimizers) {
      ScanOptions options;
      options.pipeline = cfg;
      options.pipeline.optimizer.kind = kind;
      for (int t = 0; t < trials; ++t) {
        const auto rows = dissociation_scan(a, b, distances, options);
        BenchRecord rec;
        rec.molecule = rows.empty() ? a + b : rows.front().molecule;
        rec.optimizer = to_string(kind);
        rec.trial = t;
        for (const auto& r : rows) {
          rec.total_wall_time_s += r.wall_time_s + r.build_time_s;
          rec.total_evals += r.n_evals;
          if (r.failed) ++rec.failed_rows;
        }
        out.push_back(rec);
      }
    }
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.molecule << ',' << r.optimizer << ',' << r.trial << ','
        << format_double(r.total_wall_time_s) << ',' << r.total_evals << '\n';
  }
}

void write_bench_summary(std::ostream& out, const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::pair<double, int>> cells;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.molecule, r.optimizer);
    auto [it, inserted] = cells.try_emplace(key, 0.0, 0);
    if (inserted) order.push_back(key);
    it->second.first += r.total_wall_time_s;
    it->second.second += 1;
  }
  out << "molecule,optimizer,trials,mean_wall_time_s,log10_mean_wall_time\n";
  for (const auto& key : order) {
    const auto& [sum, count] = cells.at(key);
    const double mean = sum / count;
    out << key.first << ',' << key.second << ',' << count << ',' << format_double(mean) << ','
        << format_double(mean > 0.0 ? std::log10(mean) : std::nan("")) << '\n';
  }
}

}  // namespace vqe
