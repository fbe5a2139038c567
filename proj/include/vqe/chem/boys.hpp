// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace vqe::chem {

inline constexpr int kMaxBoysOrder = 16;

/// F_m(x) = int_0^1 t^{2m} exp(-x t^2) dt for 0 <= m <= 16, x >= 0.
double boys(int m, double x);

/// Fills out[0..m_max] with F_0(x)..F_{m_max}(x) in one pass.
void boys_table(int m_max, double x, std::span<double> out);

}  // namespace vqe::chem
