//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/molecule.hpp"

#include <set>
#include <utility>

#include "igt/error.hpp"

namespace igt {

void Molecule::validate() const {
  const int n = static_cast<int>(atoms.size());
  std::set<std::pair<int, int>> seen;
  for (const Bond &b : bonds) {
    if (b.i < 0 || b.i >= n || b.j < 0 || b.j >= n)
      throw Error("bond endpoint out of range in molecule '" + name + "'");
    if (b.i == b.j)
      throw Error("self-bond on atom " + std::to_string(b.i) +
                  " in molecule '" + name + "'");
    auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second)
      throw Error("duplicate bond (" + std::to_string(key.first) + "," +
                  std::to_string(key.second) + ") in molecule '" + name + "'");
  }
}

Molecule strip_hydrogens(const Molecule &mol) {
  Molecule out;
  out.name = mol.name;
  std::vector<int> remap(mol.atoms.size(), -1);
  for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
    if (mol.atoms[i].element == "H")
      continue;
    remap[i] = static_cast<int>(out.atoms.size());
    out.atoms.push_back(mol.atoms[i]);
  }
  for (const Bond &b : mol.bonds) {
    if (remap[b.i] < 0 || remap[b.j] < 0)
      continue;
    out.bonds.push_back({remap[b.i], remap[b.j], b.order});
  }
  return out;
}

} // namespace igt
