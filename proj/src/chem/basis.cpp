// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/basis.hpp"

#include <cmath>
#include <numbers>
#include <string_view>

#include "vqe/error.hpp"

namespace vqe::chem {
namespace {

struct ShellData {
  int l;
  std::array<double, 3> exponents;
  std::array<double, 3> coefficients;
};

struct ElementData {
  std::string_view symbol;
  std::vector<ShellData> shells;
};

// Published STO-3G contractions. sp shells share exponents between s and p.
const std::vector<ElementData>& sto3g_table() {
  static const std::vector<ElementData> table = {
      {"H", {{0, {3.42525091, 0.62391373, 0.16885540}, {0.15432897, 0.53532814, 0.44463454}}}},
      {"He", {{0, {6.36242139, 1.15892300, 0.31364979}, {0.15432897, 0.53532814, 0.44463454}}}},
      {"Li",
       {{0, {16.1195750, 2.93620070, 0.79465050}, {0.15432897, 0.53532814, 0.44463454}},
        {0, {0.63628970, 0.14786010, 0.04808870}, {-0.09996723, 0.39951283, 0.70011547}},
        {1, {0.63628970, 0.14786010, 0.04808870}, {0.15591627, 0.60768372, 0.39195739}}}},
      {"N",
       {{0, {99.1061690, 18.0523120, 4.88566020}, {0.15432897, 0.53532814, 0.44463454}},
        {0, {3.78045590, 0.87849660, 0.28571440}, {-0.09996723, 0.39951283, 0.70011547}},
        {1, {3.78045590, 0.87849660, 0.28571440}, {0.15591627, 0.60768372, 0.39195739}}}},
      {"F",
       {{0, {166.679130, 30.3608120, 8.21682070}, {0.15432897, 0.53532814, 0.44463454}},
        {0, {6.46480320, 1.50228120, 0.48858850}, {-0.09996723, 0.39951283, 0.70011547}},
        {1, {6.46480320, 1.50228120, 0.48858850}, {0.15591627, 0.60768372, 0.39195739}}}},
      {"Cl",
       {{0, {601.3456136, 109.5358542, 29.64467686}, {0.1543289673, 0.5353281423, 0.4446345422}},
        {0, {38.96041889, 9.053563477, 2.944499834}, {-0.09996722919, 0.3995128261, 0.7001154689}},
        {0, {2.129386495, 0.5940934274, 0.2325241410}, {-0.2196203690, 0.2255954336, 0.9003984260}},
        {1, {38.96041889, 9.053563477, 2.944499834}, {0.1559162750, 0.6076837186, 0.3919573931}},
        {1, {2.129386495, 0.5940934274, 0.2325241410}, {0.01058760429, 0.5951670053, 0.4620010120}}}},
  };
  return table;
}

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

// Overlap of two primitives on the same center with identical powers.
double same_center_overlap(double a, double b, const std::array<int, 3>& powers) {
  const double p = a + b;
  double s = 1.0;
  for (int l : powers) {
    s *= double_factorial(2 * l - 1) / std::pow(2.0 * p, l) * std::sqrt(std::numbers::pi / p);
  }
  return s;
}

double primitive_norm(double a, const std::array<int, 3>& powers) {
  return 1.0 / std::sqrt(same_center_overlap(a, a, powers));
}

BasisFunction make_function(const Shell& shell, int shell_index,
                            const std::array<int, 3>& powers) {
  BasisFunction f;
  f.atom = shell.atom;
  f.shell = shell_index;
  f.center = shell.center;
  f.powers = powers;
  f.exponents = shell.exponents;
  f.coefficients.resize(shell.exponents.size());
  for (std::size_t k = 0; k < shell.exponents.size(); ++k) {
    f.coefficients[k] = shell.coefficients[k] * primitive_norm(shell.exponents[k], powers);
  }
  const double scale = 1.0 / std::sqrt(self_overlap(f));
  for (auto& c : f.coefficients) c *= scale;
  return f;
}

}  // namespace

double self_overlap(const BasisFunction& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.exponents.size(); ++i) {
    for (std::size_t j = 0; j < f.exponents.size(); ++j) {
      s += f.coefficients[i] * f.coefficients[j] *
           same_center_overlap(f.exponents[i], f.exponents[j], f.powers);
    }
  }
  return s;
}

ShellBasis sto3g_basis(const Molecule& m) {
  ShellBasis basis;
  for (std::size_t ai = 0; ai < m.atoms.size(); ++ai) {
    const Atom& atom = m.atoms[ai];
    const ElementData* data = nullptr;
    for (const auto& e : sto3g_table()) {
      if (e.symbol == atom.symbol) data = &e;
    }
    if (data == nullptr) {
      throw BasisError("no STO-3G data for element '" + atom.symbol + "'");
    }
    for (const auto& sd : data->shells) {
      Shell shell;
      shell.atom = static_cast<int>(ai);
      shell.l = sd.l;
      shell.center = atom.position_bohr();
      shell.exponents.assign(sd.exponents.begin(), sd.exponents.end());
      shell.coefficients.assign(sd.coefficients.begin(), sd.coefficients.end());
      basis.shells.push_back(std::move(shell));
    }
  }
  // Per atom the table lists s shells before p shells (Cl: 1s 2s 3s 2p 3p).
  for (std::size_t si = 0; si < basis.shells.size(); ++si) {
    const Shell& shell = basis.shells[si];
    if (shell.l == 0) {
      basis.functions.push_back(make_function(shell, static_cast<int>(si), {0, 0, 0}));
    } else {
      for (const auto& powers : {std::array<int, 3>{1, 0, 0}, std::array<int, 3>{0, 1, 0},
                                 std::array<int, 3>{0, 0, 1}}) {
        basis.functions.push_back(make_function(shell, static_cast<int>(si), powers));
      }
    }
  }
  return basis;
}

}  // namespace vqe::chem
