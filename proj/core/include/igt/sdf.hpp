//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_SDF_HPP_
#define IGT_SDF_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "igt/molecule.hpp"

namespace igt {

/// Read a V2000 connection-table SDF, one Molecule per "$$$$"-terminated
/// record. Atom rows yield position/element/charge (old-style charge codes
/// plus "M  CHG" overrides), bond rows yield typed bonds (order codes 1/2/3/4
/// mapping to single/double/triple/aromatic). Hydrogens are retained here and
/// dropped later at graph-build time.
///
/// Throws ParseError when the counts line disagrees with the actual block
/// length or a bond order code is unknown.
std::vector<Molecule> parse_sdf(std::istream &in);
std::vector<Molecule> parse_sdf(std::string_view text);
std::vector<Molecule> parse_sdf_file(const std::string &path);

/// Debug writer: V2000 text for one molecule, terminated by "M  END\n$$$$".
/// parse_sdf(write_sdf(m)) reproduces m.
std::string write_sdf(const Molecule &mol);

} // namespace igt

#endif // IGT_SDF_HPP_
