// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/boys.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "vqe/error.hpp"

namespace vqe::chem {
namespace {

// Above this argument the upward recurrence from the erf closed form is
// stable and the series would need too many terms.
constexpr double kSeriesLimit = 30.0;

// F_m(x) = exp(-x) sum_k (2x)^k / ((2m+1)(2m+3)...(2m+2k+1))
double boys_series(int m, double x) {
  double term = 1.0 / (2 * m + 1);
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= 2.0 * x / (2 * m + 2 * k + 1);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return std::exp(-x) * sum;
}

}  // namespace

void boys_table(int m_max, double x, std::span<double> out) {
  if (m_max < 0 || m_max > kMaxBoysOrder || x < 0.0 ||
      out.size() < static_cast<std::size_t>(m_max + 1)) {
    throw ConfigError("boys: order must be in [0, 16] and x >= 0");
  }
  const double ex = std::exp(-x);
  if (x < kSeriesLimit) {
    out[m_max] = boys_series(m_max, x);
    for (int m = m_max - 1; m >= 0; --m) out[m] = (2.0 * x * out[m + 1] + ex) / (2 * m + 1);
    return;
  }
  out[0] = 0.5 * std::sqrt(std::numbers::pi / x) * std::erf(std::sqrt(x));
  for (int m = 0; m < m_max; ++m) out[m + 1] = ((2 * m + 1) * out[m] - ex) / (2.0 * x);
}

double boys(int m, double x) {
  std::array<double, kMaxBoysOrder + 1> table{};
  boys_table(m, x, table);
  return table[m];
}

}  // namespace vqe::chem
