//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_PDB_HPP_
#define IGT_PDB_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "igt/molecule.hpp"

namespace igt {

struct PdbOptions {
  /// Keep heavy HETATM atoms (waters, ions, cofactors). When false only ATOM
  /// records are read.
  bool keep_hetero = true;
};

/// Read the ATOM/HETATM subset of a PDB file into one heavy-atom Molecule.
///
/// Fixed-column slices: name 13-16, altLoc 17, residue 18-20, x/y/z
/// 31-38/39-46/47-54, element 77-78. Atoms with an altLoc other than ' ' or
/// 'A' are skipped, hydrogens are dropped, bonds are left empty. The element
/// comes from columns 77-78 when present, otherwise it is inferred from the
/// leading alphabetic characters of the atom name.
///
/// Throws ParseError (with line number) on a malformed coordinate field and
/// EmptyStructureError when no atom survives the filters.
Molecule parse_pdb(std::istream &in, const PdbOptions &opts = {});
Molecule parse_pdb(std::string_view text, const PdbOptions &opts = {});
Molecule parse_pdb_file(const std::string &path, const PdbOptions &opts = {});

} // namespace igt

#endif // IGT_PDB_HPP_
