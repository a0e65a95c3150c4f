//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_FIXTURES_HPP_
#define IGT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "igt/featurize.hpp"
#include "igt/molecule.hpp"

namespace igt {

/// A small bundled receptor-ligand complex used by the gradient-check
/// command and the self tests. The receptor is a four-residue peptide
/// pocket plus one distant residue outside every cutoff; the ligand is a
/// 12-atom substituted thiophene. Geometry was screened so that bond
/// inference, pocket extraction, and edge construction sit far from every
/// distance threshold and all three graph Laplacians have well-separated
/// eigenvalues.
const std::string &fixture_receptor_pdb();
const std::string &fixture_ligand_sdf();

/// Three docked poses of the bundled ligand: the reference geometry, a
/// small perturbation (RMSD 0.77 A), and a shifted placement (RMSD 5.76 A).
const std::string &fixture_poses_sdf();

Molecule fixture_receptor();
Molecule fixture_ligand();
std::vector<Molecule> fixture_poses();

/// featurize_complex over the bundled pair with canonical eigenvector signs.
GraphSet fixture_graphs(const FeatureConfig &cfg);

} // namespace igt

#endif // IGT_FIXTURES_HPP_
