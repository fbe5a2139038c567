// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vqe::chem {

using Vec3 = std::array<double, 3>;

inline constexpr double kAngstromToBohr = 1.8897259886;

struct Atom {
  std::string symbol;
  int atomic_number = 0;
  Vec3 position{};  // Angstrom

  Vec3 position_bohr() const {
    return {position[0] * kAngstromToBohr, position[1] * kAngstromToBohr,
            position[2] * kAngstromToBohr};
  }
};

/// Closed-shell molecule; positions in Angstrom.
struct Molecule {
  std::vector<Atom> atoms;
  int charge = 0;

  int n_electrons() const;
  /// Formula-like label, e.g. "H2", "LiH", "HCl".
  std::string label() const;
  /// Throws GeometryError if two atoms coincide.
  void validate() const;
};

/// Atomic number for an element symbol in H..Ar; throws ElementError.
int atomic_number(std::string_view symbol);

/// Atom A at the origin, atom B on the +x axis at `distance` Angstrom.
Molecule build_diatomic(std::string_view element_a, std::string_view element_b,
                        double distance);

/// Standard XYZ: count line, comment line, `symbol x y z` in Angstrom.
Molecule read_xyz(std::istream& in);
Molecule read_xyz_file(const std::string& path);

/// Nuclear repulsion sum_{i<j} Z_i Z_j / R_ij in Hartree.
double nuclear_repulsion(const Molecule& m);

}  // namespace vqe::chem
