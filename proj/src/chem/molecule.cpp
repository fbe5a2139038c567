// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/chem/molecule.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "vqe/error.hpp"

namespace vqe::chem {
namespace {

constexpr std::array<std::string_view, 18> kElements = {
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F",
    "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};

double distance_bohr(const Atom& a, const Atom& b) {
  const auto pa = a.position_bohr();
  const auto pb = b.position_bohr();
  double s = 0.0;
  for (int k = 0; k < 3; ++k) s += (pa[k] - pb[k]) * (pa[k] - pb[k]);
  return std::sqrt(s);
}

}  // namespace

int atomic_number(std::string_view symbol) {
  for (std::size_t i = 0; i < kElements.size(); ++i) {
    if (kElements[i] == symbol) return static_cast<int>(i) + 1;
  }
  throw ElementError("unknown element '" + std::string(symbol) + "'");
}

int Molecule::n_electrons() const {
  int z = 0;
  for (const auto& a : atoms) z += a.atomic_number;
  return z - charge;
}

std::string Molecule::label() const {
  if (atoms.size() == 2 && atoms[0].symbol == atoms[1].symbol) return atoms[0].symbol + "2";
  std::string s;
  for (const auto& a : atoms) s += a.symbol;
  return s;
}

void Molecule::validate() const {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (distance_bohr(atoms[i], atoms[j]) < 1e-8) {
        throw GeometryError("atoms " + std::to_string(i) + " and " + std::to_string(j) +
                            " coincide");
      }
    }
  }
}

Molecule build_diatomic(std::string_view element_a, std::string_view element_b,
                        double distance) {
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    throw GeometryError("diatomic distance must be positive, got " + std::to_string(distance));
  }
  Molecule m;
  m.atoms.push_back(Atom{std::string(element_a), atomic_number(element_a), {0.0, 0.0, 0.0}});
  m.atoms.push_back(
      Atom{std::string(element_b), atomic_number(element_b), {distance, 0.0, 0.0}});
  return m;
}

Molecule read_xyz(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("XYZ: missing atom count line");
  int count = 0;
  try {
    count = std::stoi(line);
  } catch (const std::exception&) {
    throw ParseError("XYZ: bad atom count '" + line + "'");
  }
  if (count < 1) throw ParseError("XYZ: atom count must be positive");
  if (!std::getline(in, line)) throw ParseError("XYZ: missing comment line");
  Molecule m;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("XYZ: expected " + std::to_string(count) + " atoms");
    }
    std::istringstream fields(line);
    Atom a;
    if (!(fields >> a.symbol >> a.position[0] >> a.position[1] >> a.position[2])) {
      throw ParseError("XYZ: malformed atom line '" + line + "'");
    }
    a.atomic_number = atomic_number(a.symbol);
    m.atoms.push_back(std::move(a));
  }
  m.validate();
  return m;
}

Molecule read_xyz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open XYZ file '" + path + "'");
  return read_xyz(in);
}

double nuclear_repulsion(const Molecule& m) {
  double e = 0.0;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < m.atoms.size(); ++j) {
      e += m.atoms[i].atomic_number * m.atoms[j].atomic_number /
           distance_bohr(m.atoms[i], m.atoms[j]);
    }
  }
  return e;
}

}  // namespace vqe::chem
