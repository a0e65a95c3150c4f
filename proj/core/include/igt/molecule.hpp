//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_MOLECULE_HPP_
#define IGT_MOLECULE_HPP_

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace igt {

using Vec3 = std::array<double, 3>;

inline double distance(const Vec3 &a, const Vec3 &b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

enum class BondOrder : int {
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

struct Bond {
  int i = 0;
  int j = 0;
  BondOrder order = BondOrder::Single;
};

struct Atom {
  std::string element;      // canonical symbol, "X" for unknown
  Vec3 position{0, 0, 0};   // Angstrom
  int formal_charge = 0;
  bool is_aromatic = false;
  int source_index = 0;     // 0-based index in the originating file
};

struct Molecule {
  std::string name;
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  std::size_t size() const { return atoms.size(); }

  /// Throws igt::Error when a bond endpoint is out of range, a bond is a
  /// self-loop, or the same undirected pair appears twice.
  void validate() const;
};

/// Copy without hydrogen atoms; bonds are remapped, bonds touching a dropped
/// hydrogen are removed.
Molecule strip_hydrogens(const Molecule &mol);

} // namespace igt

#endif // IGT_MOLECULE_HPP_
