// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/integrals.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "vqe/chem/boys.hpp"
#include "vqe/error.hpp"

namespace vqe::chem {
namespace {

constexpr double kPi = std::numbers::pi;
// Angular momentum per Cartesian direction is at most 1; kinetic needs +2.
constexpr int kMaxA = 2;
constexpr int kMaxB = 4;
constexpr int kMaxT = kMaxA + kMaxB;

/// Hermite expansion coefficients E^{ij}_t for one Cartesian direction.
class HermiteE {
 public:
  HermiteE(int la, int lb, double a, double b, double a_minus_b) {
    const double p = a + b;
    const double mu = a * b / p;
    const double xpa = -b / p * a_minus_b;
    const double xpb = a / p * a_minus_b;
    const double inv2p = 0.5 / p;
    for (auto& row : e_) for (auto& col : row) col.fill(0.0);
    e_[0][0][0] = std::exp(-mu * a_minus_b * a_minus_b);
    for (int i = 0; i <= la; ++i) {
      for (int j = 0; j <= lb; ++j) {
        if (i == 0 && j == 0) continue;
        const bool step_i = i > 0;
        const int pi = step_i ? i - 1 : i;
        const int pj = step_i ? j : j - 1;
        const double x = step_i ? xpa : xpb;
        for (int t = 0; t <= i + j; ++t) {
          double v = x * e_[pi][pj][t];
          if (t > 0) v += inv2p * e_[pi][pj][t - 1];
          if (t + 1 <= pi + pj) v += (t + 1) * e_[pi][pj][t + 1];
          e_[i][j][t] = v;
        }
      }
    }
  }

  double operator()(int i, int j, int t) const {
    if (t < 0 || t > i + j) return 0.0;
    return e_[i][j][t];
  }

 private:
  std::array<std::array<std::array<double, kMaxT + 1>, kMaxB + 1>, kMaxA + 1> e_{};
};

/// Hermite Coulomb integrals R_{tuv}(p, PC) for t+u+v <= L.
class HermiteR {
 public:
  HermiteR(int order, double p, const Vec3& pc) {
    const double r2 = pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2];
    std::array<double, kMaxBoysOrder + 1> f{};
    boys_table(order, p * r2, f);
    // levels_[n] holds R^n_{tuv}; only t+u+v <= order-n is filled.
    levels_.assign(static_cast<std::size_t>(order + 1), Table{});
    double factor = 1.0;
    for (int n = 0; n <= order; ++n) {
      levels_[n][0][0][0] = factor * f[n];
      factor *= -2.0 * p;
    }
    for (int n = order - 1; n >= 0; --n) {
      const int top = order - n;
      const Table& up = levels_[n + 1];
      Table& cur = levels_[n];
      for (int total = 1; total <= top; ++total) {
        for (int t = 0; t <= total; ++t) {
          for (int u = 0; u <= total - t; ++u) {
            const int v = total - t - u;
            double r;
            if (t > 0) {
              r = pc[0] * up[t - 1][u][v] + (t > 1 ? (t - 1) * up[t - 2][u][v] : 0.0);
            } else if (u > 0) {
              r = pc[1] * up[t][u - 1][v] + (u > 1 ? (u - 1) * up[t][u - 2][v] : 0.0);
            } else {
              r = pc[2] * up[t][u][v - 1] + (v > 1 ? (v - 1) * up[t][u][v - 2] : 0.0);
            }
            cur[t][u][v] = r;
          }
        }
      }
    }
  }

  double operator()(int t, int u, int v) const { return levels_[0][t][u][v]; }

 private:
  static constexpr int kMaxL = 4;
  using Table = std::array<std::array<std::array<double, kMaxL + 1>, kMaxL + 1>, kMaxL + 1>;
  std::vector<Table> levels_;
};

struct HermiteTerm {
  int t, u, v;
  double e;
};

/// Product of two primitives expanded in Hermite Gaussians about P.
struct PrimitivePair {
  double p = 0.0;
  Vec3 center{};
  double weight = 0.0;  // product of contraction coefficients
  std::vector<HermiteTerm> terms;
};

struct FunctionPair {
  int order = 0;  // total angular momentum of the pair
  std::vector<PrimitivePair> primitives;
};

FunctionPair make_pair_data(const BasisFunction& fa, const BasisFunction& fb) {
  FunctionPair out;
  const auto& la = fa.powers;
  const auto& lb = fb.powers;
  out.order = la[0] + la[1] + la[2] + lb[0] + lb[1] + lb[2];
  for (std::size_t i = 0; i < fa.exponents.size(); ++i) {
    for (std::size_t j = 0; j < fb.exponents.size(); ++j) {
      const double a = fa.exponents[i];
      const double b = fb.exponents[j];
      PrimitivePair pp;
      pp.p = a + b;
      pp.weight = fa.coefficients[i] * fb.coefficients[j];
      std::array<HermiteE, 3> e = {
          HermiteE(la[0], lb[0], a, b, fa.center[0] - fb.center[0]),
          HermiteE(la[1], lb[1], a, b, fa.center[1] - fb.center[1]),
          HermiteE(la[2], lb[2], a, b, fa.center[2] - fb.center[2])};
      for (int d = 0; d < 3; ++d) pp.center[d] = (a * fa.center[d] + b * fb.center[d]) / pp.p;
      for (int t = 0; t <= la[0] + lb[0]; ++t) {
        for (int u = 0; u <= la[1] + lb[1]; ++u) {
          for (int v = 0; v <= la[2] + lb[2]; ++v) {
            const double coef = e[0](la[0], lb[0], t) * e[1](la[1], lb[1], u) *
                                e[2](la[2], lb[2], v);
            if (coef != 0.0) pp.terms.push_back({t, u, v, coef});
          }
        }
      }
      out.primitives.push_back(std::move(pp));
    }
  }
  return out;
}

double overlap_1d(const HermiteE& e, int i, int j, double p) {
  return e(i, j, 0) * std::sqrt(kPi / p);
}

// Kinetic 1D factor: -2b^2 S_{i,j+2} + b(2j+1) S_{ij} - j(j-1)/2 S_{i,j-2}.
double kinetic_1d(const HermiteE& e, int i, int j, double b, double p) {
  double t = -2.0 * b * b * overlap_1d(e, i, j + 2, p) + b * (2 * j + 1) * overlap_1d(e, i, j, p);
  if (j >= 2) t -= 0.5 * j * (j - 1) * overlap_1d(e, i, j - 2, p);
  return t;
}

void one_electron(const BasisFunction& fa, const BasisFunction& fb, double& s, double& t) {
  s = 0.0;
  t = 0.0;
  for (std::size_t i = 0; i < fa.exponents.size(); ++i) {
    for (std::size_t j = 0; j < fb.exponents.size(); ++j) {
      const double a = fa.exponents[i];
      const double b = fb.exponents[j];
      const double p = a + b;
      double sd[3];
      double td[3];
      for (int d = 0; d < 3; ++d) {
        const HermiteE e(fa.powers[d], fb.powers[d] + 2, a, b, fa.center[d] - fb.center[d]);
        sd[d] = overlap_1d(e, fa.powers[d], fb.powers[d], p);
        td[d] = kinetic_1d(e, fa.powers[d], fb.powers[d], b, p);
      }
      const double w = fa.coefficients[i] * fb.coefficients[j];
      s += w * sd[0] * sd[1] * sd[2];
      t += w * (td[0] * sd[1] * sd[2] + sd[0] * td[1] * sd[2] + sd[0] * sd[1] * td[2]);
    }
  }
}

double nuclear_attraction(const FunctionPair& pair, const Molecule& m) {
  double v = 0.0;
  for (const auto& atom : m.atoms) {
    const Vec3 c = atom.position_bohr();
    for (const auto& pp : pair.primitives) {
      const Vec3 pc = {pp.center[0] - c[0], pp.center[1] - c[1], pp.center[2] - c[2]};
      const HermiteR r(pair.order, pp.p, pc);
      double sum = 0.0;
      for (const auto& h : pp.terms) sum += h.e * r(h.t, h.u, h.v);
      v -= atom.atomic_number * pp.weight * 2.0 * kPi / pp.p * sum;
    }
  }
  return v;
}

double electron_repulsion(const FunctionPair& bra, const FunctionPair& ket) {
  const int order = bra.order + ket.order;
  double total = 0.0;
  for (const auto& pb : bra.primitives) {
    for (const auto& pk : ket.primitives) {
      const double p = pb.p;
      const double q = pk.p;
      const double alpha = p * q / (p + q);
      const Vec3 pq = {pb.center[0] - pk.center[0], pb.center[1] - pk.center[1],
                       pb.center[2] - pk.center[2]};
      const HermiteR r(order, alpha, pq);
      double sum = 0.0;
      for (const auto& hb : pb.terms) {
        for (const auto& hk : pk.terms) {
          const double sign = ((hk.t + hk.u + hk.v) & 1) ? -1.0 : 1.0;
          sum += hb.e * hk.e * sign * r(hb.t + hk.t, hb.u + hk.u, hb.v + hk.v);
        }
      }
      const double pref = 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q));
      total += pb.weight * pk.weight * pref * sum;
    }
  }
  return total;
}

void check_consistency(const Molecule& m, const ShellBasis& b) {
  if (b.functions.empty()) throw ConsistencyError("empty basis");
  for (const auto& f : b.functions) {
    if (f.atom < 0 || f.atom >= static_cast<int>(m.atoms.size())) {
      throw ConsistencyError("basis function refers to atom " + std::to_string(f.atom) +
                             " not present in the molecule");
    }
    const Vec3 c = m.atoms[f.atom].position_bohr();
    for (int d = 0; d < 3; ++d) {
      if (std::abs(c[d] - f.center[d]) > 1e-10) {
        throw ConsistencyError("basis function center does not match atom position");
      }
    }
  }
}

}  // namespace

void EriTensor::set_symmetric(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                              double v) {
  (*this)(i, j, k, l) = v;
  (*this)(j, i, k, l) = v;
  (*this)(i, j, l, k) = v;
  (*this)(j, i, l, k) = v;
  (*this)(k, l, i, j) = v;
  (*this)(l, k, i, j) = v;
  (*this)(k, l, j, i) = v;
  (*this)(l, k, j, i) = v;
}

IntegralSet compute_integrals(const Molecule& m, const ShellBasis& b) {
  check_consistency(m, b);
  const auto n = static_cast<Eigen::Index>(b.size());
  IntegralSet ints;
  ints.overlap.resize(n, n);
  ints.kinetic.resize(n, n);
  ints.nuclear.resize(n, n);
  ints.eri = EriTensor(b.size());
  ints.nuclear_repulsion = nuclear_repulsion(m);

  std::vector<FunctionPair> pairs;
  std::vector<std::pair<int, int>> pair_index;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const auto& fi = b.functions[i];
      const auto& fj = b.functions[j];
      double s = 0.0;
      double t = 0.0;
      one_electron(fi, fj, s, t);
      pairs.push_back(make_pair_data(fi, fj));
      pair_index.emplace_back(static_cast<int>(i), static_cast<int>(j));
      const double v = nuclear_attraction(pairs.back(), m);
      ints.overlap(i, j) = ints.overlap(j, i) = s;
      ints.kinetic(i, j) = ints.kinetic(j, i) = t;
      ints.nuclear(i, j) = ints.nuclear(j, i) = v;
    }
  }
  for (std::size_t ij = 0; ij < pairs.size(); ++ij) {
    for (std::size_t kl = 0; kl <= ij; ++kl) {
      const double v = electron_repulsion(pairs[ij], pairs[kl]);
      const auto [i, j] = pair_index[ij];
      const auto [k, l] = pair_index[kl];
      ints.eri.set_symmetric(i, j, k, l, v);
    }
  }
  return ints;
}

}  // namespace vqe::chem
